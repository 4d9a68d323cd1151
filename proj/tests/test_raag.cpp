#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "raaglab/raag.hpp"
#include "raaglab/graph.hpp"

using namespace raaglab;

namespace {
Graph path3() { return Graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }
} // namespace

TEST_CASE("free abelian rank counts single-vertex join factors") {
    Raag z2(Graph({"a", "b"}, {{"a", "b"}}));
    CHECK(z2.free_abelian_rank() == 2);
    CHECK(z2.gamma_prime().empty());
    Raag f2(Graph({"a", "b"}, {}));
    CHECK(f2.free_abelian_rank() == 0);
    // b is adjacent to everything: Z x F2
    Raag mixed(Graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}));
    CHECK(mixed.free_abelian_rank() == 1);
    CHECK(mixed.central_generators() == std::vector<std::string>{"b"});
    CHECK(mixed.gamma_prime().size() == 2);
}

TEST_CASE("prime multiset and raag isomorphism") {
    Raag a(Graph({"a", "b", "c", "d"},
                 {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}}));
    Raag b(Graph({"p", "q", "r", "s"},
                 {{"p", "r"}, {"r", "q"}, {"q", "s"}, {"s", "p"}}));
    CHECK(a.prime_multiset().size() == 2);  // F2 x F2
    CHECK(raag_isomorphic(a, b));
    CHECK_FALSE(raag_isomorphic(a, Raag(path3())));
}

TEST_CASE("product and cancellation") {
    Raag a(path3());
    Raag c(Graph({"a", "b"}, {}));  // F2
    Raag prod = raag_product(a, c);
    CHECK(prod.generator_count() == 5);
    auto back = cancel(prod, c);
    REQUIRE(back.has_value());
    CHECK(raag_isomorphic(*back, a));
    // F2 is not a factor of Z^2
    Raag z2(Graph({"a", "b"}, {{"a", "b"}}));
    CHECK_FALSE(cancel(z2, c).has_value());
    // cancelling everything leaves the trivial group
    auto triv = cancel(c, c);
    REQUIRE(triv.has_value());
    CHECK(triv->is_trivial());
}

TEST_CASE("generator census of the path a-b-c") {
    // 2 graph automorphisms, 3 inversions, 4 transvections (Link(a) = {b}
    // sits in Star(b) and in Star(c), symmetrically for Link(c), while
    // Link(b) = {a,c} sits in no other star), and 2 partial conjugations
    // (the single components left by removing Star(a), resp. Star(c)).
    auto gens = enumerate_generators(Raag(path3()));
    int auts = 0, invs = 0, tvs = 0, pcs = 0;
    for (const auto& g : gens) switch (g.kind) {
        case AutGenerator::Kind::GraphAut: ++auts; break;
        case AutGenerator::Kind::Inversion: ++invs; break;
        case AutGenerator::Kind::Transvection: ++tvs; break;
        case AutGenerator::Kind::PartialConjugation: ++pcs; break;
    }
    CHECK(auts == 2);
    CHECK(invs == 3);
    CHECK(tvs == 4);
    CHECK(pcs == 2);
}

TEST_CASE("every generator of a free group is classified") {
    AutStructure s = aut_structure(Raag(Graph({"a", "b", "c"}, {})));
    CHECK(s.d == 0);
    CHECK(s.gamma_prime_size == 3);
    CHECK(s.classified.size() == enumerate_generators(
              Raag(Graph({"a", "b", "c"}, {}))).size());
    for (const auto& [g, cls] : s.classified)
        CHECK(cls == GenClass::FactorInternal);
}

TEST_CASE("aut structure of Z^2 lives in GL_2(Z)") {
    AutStructure s = aut_structure(Raag(Graph({"a", "b"}, {{"a", "b"}})));
    CHECK(s.d == 2);
    CHECK(s.gamma_prime_size == 0);
    CHECK(s.wreath_blocks.empty());
    for (const auto& [g, cls] : s.classified) {
        // the identity graph automorphism moves nothing at all
        bool identity = g.kind == AutGenerator::Kind::GraphAut &&
                        g.perm == std::vector<std::size_t>{0, 1};
        CHECK(cls == (identity ? GenClass::FactorInternal : GenClass::GlPart));
    }
}

TEST_CASE("central transvections of Z x F2") {
    AutStructure s = aut_structure(Raag(path3()));
    CHECK(s.d == 1);
    CHECK(s.gamma_prime_size == 2);
    CHECK(s.central_transvection_rank == 2);
    int central = 0;
    for (const auto& [g, cls] : s.classified)
        if (cls == GenClass::CentralTransvection) ++central;
    CHECK(central == 2);  // a -> ab and c -> cb
}

TEST_CASE("factor-permuting automorphisms of F2 x F2") {
    Raag a(Graph({"a", "b", "c", "d"},
                 {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}}));
    AutStructure s = aut_structure(a);
    REQUIRE(s.wreath_blocks.size() == 1);
    CHECK(s.wreath_blocks[0].second == 2);
    bool has_swap = false;
    for (const auto& [g, cls] : s.classified)
        if (cls == GenClass::FactorPermuting) has_swap = true;
    CHECK(has_swap);
}
