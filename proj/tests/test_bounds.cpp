#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "raaglab/bounds.hpp"

using namespace raaglab;

namespace {
BoundsQuery q_const(long long n, long long i) {
    BoundsQuery q;
    q.n = n;
    q.i = i;
    q.coeff = CoeffKind::Constant;
    return q;
}
} // namespace

TEST_CASE("constant coefficients: pinned verdicts") {
    // iso in the range 2i <= n - 2
    CHECK(stability_range(q_const(10, 4)).isomorphism);
    CHECK_FALSE(stability_range(q_const(9, 4)).isomorphism);
    CHECK(stability_range(q_const(9, 4)).surjective);  // 2i <= n - 1
    CHECK_FALSE(stability_range(q_const(8, 4)).surjective);
    CHECK(stability_range(q_const(2, 0)).isomorphism);
}

TEST_CASE("no-Z upgrade shifts every range by one") {
    for (long long n = 2; n <= 20; ++n)
        for (long long i = 0; i <= 10; ++i) {
            BoundsQuery plain = q_const(n, i);
            BoundsQuery up = plain;
            up.b_has_no_Z_factor = true;
            BoundsQuery shifted = q_const(n + 1, i);
            RangeVerdict a = stability_range(up);
            RangeVerdict b = stability_range(shifted);
            CHECK(a.surjective == b.surjective);
            CHECK(a.injective == b.injective);
            CHECK(a.isomorphism == b.isomorphism);
        }
}

TEST_CASE("split coefficients of degree r") {
    BoundsQuery q;
    q.coeff = CoeffKind::Split;
    q.r = 2;
    q.N = 2;
    q.n = 9;
    q.i = 3;
    // surjective: 2i <= n - r - 1 = 6; injective: 2i <= n - r - 3 = 4
    CHECK(stability_range(q).surjective);
    CHECK_FALSE(stability_range(q).injective);
    q.i = 2;
    CHECK(stability_range(q).injective);
    CHECK(stability_range(q).isomorphism);
    CHECK(stability_range(q).threshold_ok);  // n > N
    q.n = 2;
    CHECK_FALSE(stability_range(q).threshold_ok);
}

TEST_CASE("commutator subgroup uses slope-3 ranges and a doubled threshold") {
    BoundsQuery q;
    q.variant = GroupVariant::CommutatorSubgroup;
    q.coeff = CoeffKind::General;
    q.r = 0;
    q.N = 3;
    q.n = 11;
    q.i = 3;
    // surjective: 3i <= n - 2; isomorphism: 3i <= n - 5
    CHECK(stability_range(q).surjective);
    CHECK_FALSE(stability_range(q).isomorphism);
    q.n = 14;
    CHECK(stability_range(q).isomorphism);
    CHECK(stability_range(q).threshold_ok);  // n > 2N
    q.n = 6;
    CHECK_FALSE(stability_range(q).threshold_ok);
}

TEST_CASE("abelian base gets the widest range") {
    BoundsQuery q = q_const(8, 4);
    q.abelian_base = true;
    CHECK(stability_range(q).surjective);       // 2i <= n
    CHECK_FALSE(stability_range(q).isomorphism);  // 2i <= n - 1
    q.i = 3;
    CHECK(stability_range(q).isomorphism);
    // only constant coefficients make sense there
    q.coeff = CoeffKind::Split;
    CHECK_THROWS_AS(stability_range(q), domain_error);
}

TEST_CASE("monotonicity: verdicts only improve as n grows") {
    for (const char* kind : {"c", "s", "g"})
        for (long long i = 0; i <= 6; ++i) {
            bool seen_surj = false, seen_iso = false;
            for (long long n = 1; n <= 30; ++n) {
                BoundsQuery q;
                q.n = n;
                q.i = i;
                if (kind[0] == 's') q.coeff = CoeffKind::Split;
                if (kind[0] == 'g') q.coeff = CoeffKind::General;
                q.r = 1;
                q.N = 1;
                RangeVerdict v = stability_range(q);
                if (seen_surj) CHECK(v.surjective);
                if (seen_iso) CHECK(v.isomorphism);
                seen_surj = v.surjective;
                seen_iso = v.isomorphism;
                if (v.isomorphism) {
                    CHECK(v.surjective);
                    CHECK(v.injective);
                }
            }
        }
}

TEST_CASE("theorem tables match the general machinery for constants") {
    auto tables = theorem_tables();
    const TheoremRange& t = tables.at("constant");
    for (long long n = 1; n <= 25; ++n)
        for (long long i = 0; i <= 12; ++i) {
            RangeVerdict v = stability_range(q_const(n, i));
            CHECK(t.surjective(n, i) == v.surjective);
            CHECK(t.isomorphism(n, i) == v.isomorphism);
        }
}

TEST_CASE("cross-check flags only the standard-representation mismatch") {
    CrossCheckReport r = cross_check(30, 15);
    CHECK_FALSE(r.discrepancies.empty());
    for (const Discrepancy& d : r.discrepancies) {
        CHECK((d.theorem == "standard" || d.theorem == "standard-noZ"));
        CHECK((d.aspect == "injective" || d.aspect == "isomorphism"));
        CHECK(d.table_value);
        CHECK_FALSE(d.general_value);
        if (d.theorem == "standard") CHECK(2 * d.i == d.n - 3);
        if (d.theorem == "standard-noZ") CHECK(2 * d.i == d.n - 2);
    }
    // the grid contains the n = 7, i = 2 instance
    bool found = false;
    for (const Discrepancy& d : r.discrepancies)
        if (d.theorem == "standard" && d.n == 7 && d.i == 2) found = true;
    CHECK(found);
}
