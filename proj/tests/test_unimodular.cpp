#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "raaglab/unimodular.hpp"

using namespace raaglab;

TEST_CASE("vertex set for n = 2, q = 1 is pinned") {
    VectorComplex vc = build_unimodular_complex(2, 1);
    std::set<std::string> got;
    for (const auto& v : vc.vectors) got.insert(vector_label(v));
    std::set<std::string> want{"(1,0)",  "(-1,0)", "(0,1)",   "(0,-1)",
                               "(1,1)",  "(-1,-1)", "(1,-1)", "(-1,1)"};
    CHECK(got == want);
    // edges = unimodular pairs: |det| = 1
    for (const auto& e : vc.complex.faces_of_dim(1)) {
        IntMatrix m = IntMatrix::from_rows(
            {vc.vectors[e[0]], vc.vectors[e[1]]});
        CHECK(abs(determinant(m)) == 1);
    }
    CHECK_THROWS_AS(build_unimodular_complex(9, 1), resource_error);
}

TEST_CASE("faces are exactly the partial bases") {
    VectorComplex vc = build_unimodular_complex(3, 1, 2);
    for (int p = 0; p <= 2; ++p)
        for (const auto& f : vc.complex.faces_of_dim(p)) {
            std::vector<std::vector<Int>> rows;
            for (int i : f) rows.push_back(vc.vectors[i]);
            CHECK(is_partial_basis(IntMatrix::from_rows(rows)));
        }
    // a non-face pair really is dependent or non-unimodular
    int i1 = vc.complex.index_of("(1,0,0)");
    int i2 = vc.complex.index_of("(-1,0,0)");
    CHECK_FALSE(vc.complex.has_face({std::min(i1, i2), std::max(i1, i2)}));
}

TEST_CASE("filtration by the last coordinate") {
    VectorComplex base = build_unimodular_complex(2, 2);
    VectorComplex o1 = maazen_filtration(base, 1);
    for (const auto& f : o1.complex.faces_of_dim(0))
        CHECK(abs(o1.vectors[f[0]][1]) <= 1);
    // O_0 keeps exactly the vectors with last coordinate 0: (+-1, 0)
    VectorComplex o0 = maazen_filtration(base, 0);
    CHECK(o0.complex.faces_of_dim(0).size() == 2);
    CHECK(o0.complex.dimension() == 0);
}

TEST_CASE("kappa: pinned values and the defining inequality") {
    CHECK(kappa(0, 3) == 0);
    CHECK(kappa(3, 3) == 0);
    CHECK(kappa(4, 3) == 1);
    CHECK(kappa(-4, 3) == -1);
    CHECK(kappa(7, 3) == 1);
    CHECK(kappa(8, 3) == 2);
    CHECK(kappa(-9, 1) == -4);
    for (int z = -50; z <= 50; ++z)
        for (int q = 0; q <= 6; ++q) {
            Int k = kappa(z, q);
            CHECK(abs(Int(z) - k * (q + 1)) < q + 1);
            if (std::abs(z) <= q) CHECK(k == 0);
        }
}

TEST_CASE("retraction onto O_q along a chosen vector") {
    // v1 = (0, 1, 2) has last coordinate q+1 for q = 1; take a piece of its
    // link and retract.
    std::vector<Int> v1{0, 1, 2};
    VectorComplex link;
    // vectors are indexed like the sorted vertex labels
    link.vectors = {{0, 0, 1}, {0, 1, 3}, {1, 0, 0}};
    link.complex = SimplicialComplex({"(0,0,1)", "(0,1,3)", "(1,0,0)"});
    link.complex.add_face_labels({"(1,0,0)", "(0,0,1)"});
    link.complex.add_face_labels({"(1,0,0)", "(0,1,3)"});
    RetractionResult r = maazen_retraction(link, v1, 1);
    CHECK(r.pass);
    for (std::size_t i = 0; i < link.vectors.size(); ++i) {
        CHECK(abs(r.images[i][2]) <= 1);  // lands in O_1
        if (abs(link.vectors[i][2]) <= 1)
            CHECK(r.images[i] == link.vectors[i]);  // fixes O_1
    }
    // (0,1,3): kappa(3,1) = 1, image (0,1,3) - (0,1,2) = (0,0,1)
    CHECK(vector_label(r.images[1]) == "(0,0,1)");
    // the wrong pivot length is rejected
    CHECK_THROWS_AS(maazen_retraction(link, std::vector<Int>{0, 1, 3}, 1),
                    domain_error);
}

TEST_CASE("SI vertices and complements over A = F2") {
    Raag a(Graph({"p", "q"}, {}));
    auto vs = sample_SI_simplex(a, 3, 1, 99, 2);
    REQUIRE(vs.size() == 2);
    CHECK(is_simplex_In_Z(vs));
    for (const auto& v : vs) CHECK(v.K.lattice.rank() == 2);
    // each f_i avoids its own complement but lies in the other one
    CHECK_FALSE(in_complement(vs[0], vs[0].K));
    CHECK_FALSE(in_complement(vs[1], vs[1].K));
    CHECK(in_complement(vs[0], vs[1].K));
    CHECK(in_complement(vs[1], vs[0].K));

    IntersectionCertificate c = complement_intersection(vs, a, 3);
    CHECK(c.pass);
    CHECK(c.rank_m == 1);  // n - p - 1
    SnVerdict s = verify_Sn_equals_SIn(vs, a, 3);
    CHECK(s.pass);
}

TEST_CASE("intersection certificates across seeds") {
    Raag triv = Raag::trivial();
    for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
        auto vs = sample_SI_simplex(triv, 4, 2, seed, 2);
        IntersectionCertificate c = complement_intersection(vs, triv, 4);
        CHECK(c.pass);
        CHECK(c.rank_m == 1);
        CHECK(c.lattice.rank() == 1);
        CHECK(verify_Sn_equals_SIn(vs, triv, 4).pass);
    }
    // degenerate input is refused with a named pair
    auto vs = sample_SI_simplex(triv, 3, 0, 7, 2);
    vs.push_back(vs[0]);
    CHECK_THROWS_AS(complement_intersection(vs, triv, 3), domain_error);
}

TEST_CASE("random_unimodular really is unimodular") {
    for (std::uint64_t seed : {10u, 11u, 12u}) {
        IntMatrix u = random_unimodular(4, seed);
        CHECK(abs(determinant(u)) == 1);
    }
}
