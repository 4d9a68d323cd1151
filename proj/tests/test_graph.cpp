#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "raaglab/graph.hpp"

using namespace raaglab;

namespace {
Graph path3() { return Graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }
Graph square() {
    return Graph({"a", "b", "c", "d"},
                 {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
}
} // namespace

TEST_CASE("construction validates input") {
    CHECK_THROWS_AS(Graph({"a", "a"}, {}), domain_error);
    CHECK_THROWS_AS(Graph({"a"}, {{"a", "a"}}), domain_error);
    CHECK_THROWS_AS(Graph({"a"}, {{"a", "b"}}), domain_error);
    Graph g({"b", "a"}, {{"b", "a"}});
    CHECK(g.vertices() == std::vector<std::string>{"a", "b"});
    CHECK(g.adjacent("a", "b"));
    CHECK(g.edge_count() == 1);
}

TEST_CASE("link and star") {
    Graph g = path3();
    CHECK(g.link_labels("b") == std::set<std::string>{"a", "c"});
    CHECK(g.star_labels("b") == std::set<std::string>{"a", "b", "c"});
    CHECK(g.link_labels("a") == std::set<std::string>{"b"});
}

TEST_CASE("complement and components") {
    Graph g = path3();
    Graph c = g.complement();
    CHECK(c.edge_count() == 1);
    CHECK(c.adjacent("a", "c"));
    // complement of the path a-b-c: b isolated, a-c an edge -> 2 components
    CHECK(c.connected_components().size() == 2);
    CHECK(g.connected_components().size() == 1);
}

TEST_CASE("canonical form is an isomorphism invariant") {
    Graph g1 = path3();
    Graph g2({"x", "y", "z"}, {{"y", "x"}, {"y", "z"}});
    CHECK(g1.canonical_form() == g2.canonical_form());
    Graph g3({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}, {"z", "x"}});
    CHECK(g1.canonical_form() != g3.canonical_form());
}

TEST_CASE("graph_isomorphic returns an edge-preserving bijection") {
    Graph g1 = square();
    Graph g2({"p", "q", "r", "s"},
             {{"p", "r"}, {"r", "q"}, {"q", "s"}, {"s", "p"}});
    auto m = graph_isomorphic(g1, g2);
    REQUIRE(m.has_value());
    std::map<std::string, std::string> f(m->begin(), m->end());
    for (const auto& [a, b] : g1.edges())
        CHECK(g2.adjacent(f.at(a), f.at(b)));
    CHECK_FALSE(graph_isomorphic(g1, path3()).has_value());
    // same vertex count, same edge count, not isomorphic
    Graph claw({"p", "q", "r", "s"}, {{"p", "q"}, {"p", "r"}, {"p", "s"}});
    Graph p4({"p", "q", "r", "s"}, {{"p", "q"}, {"q", "r"}, {"r", "s"}});
    CHECK_FALSE(graph_isomorphic(claw, p4).has_value());
}

TEST_CASE("automorphism groups of small graphs") {
    CHECK(graph_automorphisms(square()).size() == 8);     // dihedral
    CHECK(graph_automorphisms(path3()).size() == 2);      // swap endpoints
    Graph k3({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    CHECK(graph_automorphisms(k3).size() == 6);
    Graph e5({"a", "b", "c", "d", "e"}, {});
    CHECK(graph_automorphisms(e5).size() == 120);
}

TEST_CASE("join and join_decompose are inverse on the square") {
    // C4 = join of two edgeless pairs
    JoinDecomposition d = join_decompose(square());
    REQUIRE(d.factors.size() == 2);
    for (const Graph& f : d.factors) {
        CHECK(f.size() == 2);
        CHECK(f.edge_count() == 0);
    }
    Graph j = Graph::join(Graph({"a", "c"}, {}), Graph({"b", "d"}, {}));
    CHECK(j.canonical_form() == square().canonical_form());
}

TEST_CASE("join_decompose on primes and products") {
    // the path a-b-c is b joined with {a, c}
    CHECK(join_decompose(path3()).factors.size() == 2);
    // the path on four vertices has a connected complement, hence is prime
    Graph p4({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
    CHECK(join_decompose(p4).factors.size() == 1);
    Graph k3({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    CHECK(join_decompose(k3).factors.size() == 3);  // Z^3
    CHECK_THROWS_AS(join_decompose(Graph({}, {})), domain_error);
}

TEST_CASE("induced subgraph keeps labels and adjacency") {
    Graph g = square();
    Graph h = g.induced({g.index_of("a"), g.index_of("b"), g.index_of("c")});
    CHECK(h.size() == 3);
    CHECK(h.adjacent("a", "b"));
    CHECK(h.adjacent("b", "c"));
    CHECK_FALSE(h.adjacent("a", "c"));
}

TEST_CASE("relabel_with_prefix") {
    Graph g = relabel_with_prefix(path3(), "P.");
    CHECK(g.has_vertex("P.a"));
    CHECK(g.adjacent("P.a", "P.b"));
    CHECK(g.canonical_form() == path3().canonical_form());
}
