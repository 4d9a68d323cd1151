#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "raaglab/json_io.hpp"

using namespace raaglab;
using nlohmann::json;

TEST_CASE("graph round trip") {
    json j;
    j["vertices"] = {"a", "b", "c"};
    j["edges"] = json::array({{"a", "b"}, {"b", "c"}});
    Graph g = graph_from_json(j);
    CHECK(g.size() == 3);
    CHECK(g.adjacent("a", "b"));
    CHECK_FALSE(g.adjacent("a", "c"));
    Graph back = graph_from_json(graph_to_json(g));
    CHECK(back == g);
}

TEST_CASE("graph input is validated strictly") {
    auto graph_json = [](json vertices, json edges) {
        json j;
        j["vertices"] = std::move(vertices);
        j["edges"] = std::move(edges);
        return j;
    };
    // duplicate vertex
    CHECK_THROWS_AS(graph_from_json(graph_json({"a", "a"}, json::array())),
                    domain_error);
    // self loop
    CHECK_THROWS_AS(graph_from_json(graph_json({"a"}, json::array({{"a", "a"}}))),
                    domain_error);
    // undeclared endpoint
    CHECK_THROWS_AS(graph_from_json(graph_json({"a", "b"},
                                               json::array({{"a", "z"}}))),
                    domain_error);
    // duplicate edge
    CHECK_THROWS_AS(
        graph_from_json(graph_json({"a", "b"},
                                   json::array({{"a", "b"}, {"b", "a"}}))),
        domain_error);
    CHECK_THROWS_AS(graph_from_json(json::array()), domain_error);
}

TEST_CASE("complex round trip keeps exactly the maximal faces") {
    json j;
    j["maximal_faces"] = json::array({{"a", "b", "c"}, {"c", "d"}});
    SimplicialComplex c = complex_from_json(j);
    CHECK(c.vertex_count() == 4);
    CHECK(c.dimension() == 2);
    CHECK(c.has_face({c.index_of("a"), c.index_of("b")}));  // closure
    json out = complex_to_json(c);
    REQUIRE(out.contains("maximal_faces"));
    CHECK(out["maximal_faces"].size() == 2);
    SimplicialComplex back = complex_from_json(out);
    CHECK(back.all_faces() == c.all_faces());
    json dup;
    dup["maximal_faces"] = json::array({{"a", "a"}});
    CHECK_THROWS_AS(complex_from_json(dup), domain_error);
}

TEST_CASE("matrix round trip survives entries beyond 64 bits") {
    IntMatrix m(2, 2);
    m.at(0, 0) = Int("123456789012345678901234567890");
    m.at(0, 1) = -7;
    m.at(1, 0) = 0;
    m.at(1, 1) = Int("-99999999999999999999");
    json j = matrix_to_json(m);
    CHECK(j[0][0] == "123456789012345678901234567890");
    CHECK(matrix_from_json(j) == m);
    // plain integers are accepted too
    CHECK(matrix_from_json(json::parse("[[1,2],[3,4]]")).at(1, 1) == 4);
    CHECK_THROWS_AS(matrix_from_json(json::parse("[[1,2],[3]]")), domain_error);
    CHECK_THROWS_AS(matrix_from_json(json::parse("[[\"x\"]]")), domain_error);
}
