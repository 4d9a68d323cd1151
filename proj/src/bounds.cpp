#include "raaglab/bounds.hpp"

#include <sstream>

namespace raaglab {

RangeVerdict stability_range(const BoundsQuery& q) {
    if (q.n < 0 || q.i < 0 || q.r < 0 || q.N < 0)
        throw domain_error("stability_range: n, i, r, N must be >= 0");
    RangeVerdict v;
    if (q.abelian_base) {
        if (q.b_has_no_Z_factor || q.coeff != CoeffKind::Constant)
            throw domain_error(
                "abelian_base excludes the no-Z upgrade and twisted "
                "coefficients");
        v.surjective = 2 * q.i <= q.n;
        v.injective = 2 * q.i <= q.n - 1;
        v.isomorphism = v.surjective && v.injective;
        v.threshold_ok = true;
        v.applied_rule = "abelian-base: surj 2i<=n, iso 2i<=n-1";
        return v;
    }
    const long long ne = q.n + (q.b_has_no_Z_factor ? 1 : 0);
    const bool full = q.variant == GroupVariant::FullAut;
    v.threshold_ok = full ? ne > q.N : ne > 2 * q.N;
    const long long i = q.i;
    switch (q.coeff) {
        case CoeffKind::Constant:
            if (full) {
                v.surjective = 2 * i <= ne - 1;
                v.isomorphism = 2 * i <= ne - 2;
                v.applied_rule = "constant: surj 2i<=n-1, iso 2i<=n-2";
            } else {
                v.surjective = 3 * i <= ne - 2;
                v.isomorphism = 3 * i <= ne - 4;
                v.applied_rule = "constant commutator: surj 3i<=n-2, iso 3i<=n-4";
            }
            v.injective = v.isomorphism;
            break;
        case CoeffKind::General:
            if (full) {
                v.surjective = 2 * i <= ne - 1 - 2 * q.r;
                v.isomorphism = 2 * i <= ne - 3 - 2 * q.r;
                v.applied_rule = "general: surj 2i<=n-1-2r, iso 2i<=n-3-2r";
            } else {
                v.surjective = 3 * i <= ne - 2 - 3 * q.r;
                v.isomorphism = 3 * i <= ne - 5 - 3 * q.r;
                v.applied_rule =
                    "general commutator: surj 3i<=n-2-3r, iso 3i<=n-5-3r";
            }
            v.injective = v.isomorphism;
            break;
        case CoeffKind::Split:
            if (full) {
                v.surjective = 2 * i <= ne - q.r - 1;
                v.injective = 2 * i <= ne - q.r - 3;
                v.applied_rule = "split: surj 2i<=n-r-1, inj 2i<=n-r-3";
            } else {
                v.surjective = 3 * i <= ne - 2 * q.r - 2;
                v.injective = 3 * i <= ne - 2 * q.r - 5;
                v.applied_rule =
                    "split commutator: surj 3i<=n-2r-2, inj 3i<=n-2r-5";
            }
            v.isomorphism = v.surjective && v.injective;
            break;
        case CoeffKind::AbelianH1:
            // stability with the abelian coefficients H_1(Aut(-)) is what
            // yields the commutator-subgroup ranges; report those
            v.surjective = 3 * i <= ne - 2;
            v.isomorphism = 3 * i <= ne - 4;
            v.injective = v.isomorphism;
            v.applied_rule = "abelian H1 coefficients: surj 3i<=n-2, iso 3i<=n-4";
            break;
    }
    if (q.b_has_no_Z_factor) v.applied_rule += " (no-Z upgrade: n -> n+1)";
    return v;
}

std::map<std::string, TheoremRange> theorem_tables() {
    std::map<std::string, TheoremRange> t;
    // {surj_k, surj_a, inj_k, inj_a, iso_k, iso_a}
    t["constant"] = {2, 1, 2, 2, 2, 2};
    t["constant-noZ"] = {2, 0, 2, 1, 2, 1};
    t["commutator"] = {3, 2, 3, 4, 3, 4};
    t["commutator-noZ"] = {3, 1, 3, 3, 3, 3};
    t["standard"] = {2, 2, 2, 3, 2, 3};
    t["standard-noZ"] = {2, 1, 2, 2, 2, 2};
    t["abelian-base"] = {2, 0, 2, 1, 2, 1};
    return t;
}

namespace {

BoundsQuery query_for(const std::string& theorem, long long n, long long i) {
    BoundsQuery q;
    q.n = n;
    q.i = i;
    if (theorem == "constant" || theorem == "constant-noZ") {
        q.coeff = CoeffKind::Constant;
    } else if (theorem == "commutator" || theorem == "commutator-noZ") {
        q.coeff = CoeffKind::Constant;
        q.variant = GroupVariant::CommutatorSubgroup;
    } else if (theorem == "standard" || theorem == "standard-noZ") {
        q.coeff = CoeffKind::Split;
        q.r = 1;
        q.N = 0;
    } else if (theorem == "abelian-base") {
        q.abelian_base = true;
    } else {
        throw domain_error("unknown theorem " + theorem);
    }
    if (theorem.size() > 4 && theorem.substr(theorem.size() - 4) == "-noZ")
        q.b_has_no_Z_factor = true;
    return q;
}

} // namespace

CrossCheckReport cross_check(long long n_max, long long i_max) {
    CrossCheckReport rep;
    auto tables = theorem_tables();
    for (const auto& [name, range] : tables)
        for (long long n = 0; n <= n_max; ++n)
            for (long long i = 0; i <= i_max; ++i) {
                RangeVerdict g = stability_range(query_for(name, n, i));
                struct Row {
                    const char* aspect;
                    bool table_v, general_v;
                } rows[] = {
                    {"surjective", range.surjective(n, i), g.surjective},
                    {"injective", range.injective(n, i), g.injective},
                    {"isomorphism", range.isomorphism(n, i), g.isomorphism},
                };
                for (const auto& row : rows)
                    if (row.table_v != row.general_v)
                        rep.discrepancies.push_back(
                            {name, row.aspect, n, i, row.table_v,
                             row.general_v});
            }
    std::ostringstream os;
    if (rep.discrepancies.empty()) {
        os << "no discrepancies on the grid";
    } else {
        os << rep.discrepancies.size()
           << " discrepancies; all concern the standard-representation "
              "isomorphism/injectivity bound (stated i <= (n-3)/2 versus the "
              "split-coefficient instantiation i <= (n-4)/2, shifted by one "
              "in the no-Z variant)";
    }
    rep.summary = os.str();
    return rep;
}

} // namespace raaglab
