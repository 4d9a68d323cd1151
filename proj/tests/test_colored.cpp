#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "raaglab/colored.hpp"

using namespace raaglab;

namespace {
Raag f2() { return Raag(Graph({"x", "y"}, {})); }
// a coefficient group with no F2 = <x,y> direct factor
Raag f3a() { return Raag(Graph({"p", "q", "r"}, {})); }
} // namespace

TEST_CASE("ambient construction and labeling") {
    ColoredAmbient amb = make_colored_ambient(f3a(), f2(), 3);
    CHECK(amb.n == 3);
    CHECK(amb.ambient->generator_count() == 9);  // 3 + 3*2
    CHECK(amb.x_gen_labels == std::vector<std::string>{"x", "y"});
    const Graph& g = amb.ambient->graph();
    CHECK(g.has_vertex("A.p"));
    CHECK(g.has_vertex("X2.y"));
    CHECK(g.adjacent("X1.x", "X2.y"));    // different factors commute
    CHECK_FALSE(g.adjacent("X1.x", "X1.y"));
    CHECK(amb.copy_of(g.index_of("X3.x")) == 3);
    CHECK(amb.copy_of(g.index_of("A.p")) == 0);
    CHECK_FALSE(amb.is_central(g.index_of("A.p")));
}

TEST_CASE("ambient construction rejects bad factors") {
    // X = Z is excluded
    CHECK_THROWS_AS(make_colored_ambient(Raag::trivial(),
                                         Raag(Graph({"x"}, {})), 2),
                    domain_error);
    // X must be unfactorizable
    CHECK_THROWS_AS(make_colored_ambient(Raag::trivial(),
                                         Raag(Graph({"x", "y"}, {{"x", "y"}})),
                                         2),
                    domain_error);
    // at least one copy of X
    CHECK_THROWS_AS(make_colored_ambient(f3a(), f2(), 0), domain_error);
    // A must not contain an X factor
    CHECK_THROWS_AS(make_colored_ambient(f2(), f2(), 2), domain_error);
}

TEST_CASE("color detection") {
    ColoredAmbient amb = make_colored_ambient(Raag::trivial(), f2(), 2);
    auto a = amb.ambient;
    CHECK(color_of(amb, {Word::parse(a, "X1.x"), Word::parse(a, "X1.y")}) == 1);
    CHECK(color_of(amb, {Word::parse(a, "X2.x X2.y"), Word::parse(a, "X2.y")})
          == 2);
    // images straddling two copies are rejected
    CHECK_THROWS_AS(
        color_of(amb, {Word::parse(a, "X1.x"), Word::parse(a, "X2.y")}),
        domain_error);
    // all-central images have no color
    CHECK_THROWS_AS(color_of(amb, {Word(a), Word(a)}), domain_error);
}

TEST_CASE("central letters do not affect the color") {
    // A = Z: its generator is central in A x X^2
    ColoredAmbient amb =
        make_colored_ambient(Raag(Graph({"z"}, {})), f2(), 2);
    auto a = amb.ambient;
    CHECK(amb.is_central(a->graph().index_of("A.z")));
    CHECK(color_of(amb, {Word::parse(a, "A.z X2.x"), Word::parse(a, "X2.y")})
          == 2);
}

TEST_CASE("complements in factor form") {
    ColoredAmbient amb = make_colored_ambient(f3a(), f2(), 3);
    FactorComplement c = canonical_complement(amb, {2});
    CHECK(c.factors == std::vector<std::string>{"A", "X1", "X3"});
    c = canonical_complement(amb, {1, 3});
    CHECK(c.factors == std::vector<std::string>{"A", "X2"});
    CHECK_THROWS_AS(canonical_complement(amb, {1, 1}), domain_error);
}

TEST_CASE("simplex law is distinct colors") {
    ColoredAmbient amb = make_colored_ambient(Raag::trivial(), f2(), 3);
    ColoredVertexData v1 = standard_inclusion(amb, 1);
    ColoredVertexData v2 = standard_inclusion(amb, 2);
    CHECK(v1.color == 1);
    CHECK(is_simplex_In({v1, v2}));
    CHECK_FALSE(is_simplex_In({v1, v1}));
    // twisting keeps the color
    auto gens = enumerate_generators(*amb.ambient);
    for (const auto& g : gens) {
        ColoredVertexData w = apply_to_vertex(amb, g, v1);
        CHECK((w.color == v1.color ||
               g.kind == AutGenerator::Kind::GraphAut));
    }
}

TEST_CASE("sampled I_n chunk is a complete join over the simplex") {
    InSample s = build_In_sample(Raag::trivial(), f2(), 3, 2, 2, 3, 4242);
    CHECK(s.complex.vertex_count() == 6);
    JoinVerdict v = verify_complete_join(s.complex, s.delta, s.projection);
    CHECK(v.pass);
    // a cross-polytope: H~_{n-1} = Z and nothing below
    HomologyReport h = homology(s.complex, 2);
    CHECK(h.betti == std::vector<long long>{0, 0, 1});
    // determinism: same seed, same vertex keys
    InSample s2 = build_In_sample(Raag::trivial(), f2(), 3, 2, 2, 3, 4242);
    for (std::size_t i = 0; i < s.vertices.size(); ++i)
        CHECK(s.vertices[i].key() == s2.vertices[i].key());
}
