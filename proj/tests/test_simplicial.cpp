#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "raaglab/simplicial.hpp"

using namespace raaglab;

namespace {

SimplicialComplex hollow_triangle() {
    return SimplicialComplex::from_maximal({"a", "b", "c"},
                                           {{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

// Boundary of the 3-dimensional cross-polytope: vertices +-e1, +-e2, +-e3,
// faces avoiding antipodal pairs. A 2-sphere.
SimplicialComplex octahedron() {
    SimplicialComplex c({"x+", "x-", "y+", "y-", "z+", "z-"});
    for (const char* x : {"x+", "x-"})
        for (const char* y : {"y+", "y-"})
            for (const char* z : {"z+", "z-"})
                c.add_face_labels({x, y, z});
    return c;
}

// Minimal 6-vertex triangulation of the real projective plane.
SimplicialComplex rp2() {
    return SimplicialComplex::from_maximal(
        {"1", "2", "3", "4", "5", "6"},
        {{"1", "2", "3"}, {"1", "3", "4"}, {"1", "2", "6"}, {"1", "5", "6"},
         {"1", "4", "5"}, {"2", "3", "5"}, {"2", "4", "5"}, {"2", "4", "6"},
         {"3", "4", "6"}, {"3", "5", "6"}});
}

} // namespace

TEST_CASE("face bookkeeping") {
    SimplicialComplex c({"a", "b", "c", "d"});
    c.add_face_labels({"a", "b", "c"});
    CHECK(c.dimension() == 2);
    CHECK(c.face_count() == 7);  // 3 + 3 + 1
    CHECK(c.has_face({0, 1}));
    CHECK_FALSE(c.has_face({0, 3}));
    CHECK(c.faces_of_dim(1).size() == 3);
    CHECK(c.euler_characteristic() == 0);  // reduced: contractible
    SimplicialComplex empty(std::vector<std::string>{});
    CHECK(empty.is_empty());
    CHECK(empty.dimension() == -1);
    CHECK(empty.euler_characteristic() == -1);
}

TEST_CASE("links and full subcomplexes") {
    SimplicialComplex c = octahedron();
    SimplicialComplex l = c.link_of({c.index_of("z+")});
    // link of a vertex of the octahedron is a 4-cycle
    CHECK(l.faces_of_dim(0).size() == 4);
    CHECK(l.faces_of_dim(1).size() == 4);
    CHECK(l.dimension() == 1);
    HomologyReport h = homology(l, 1);
    CHECK(h.betti == std::vector<long long>{0, 1});

    std::set<int> sub{c.index_of("x+"), c.index_of("x-"), c.index_of("y+")};
    SimplicialComplex f = c.full_subcomplex(sub);
    CHECK(f.dimension() == 1);  // path x+ - y+ - x-
    CHECK(f.faces_of_dim(1).size() == 2);
}

TEST_CASE("pinned homology: sphere, circle, projective plane") {
    HomologyReport s = homology(octahedron(), 2);
    CHECK(s.betti == std::vector<long long>{0, 0, 1});
    for (const auto& t : s.torsion) CHECK(t.empty());

    HomologyReport circ = homology(hollow_triangle(), 1);
    CHECK(circ.betti == std::vector<long long>{0, 1});

    HomologyReport p = homology(rp2(), 2);
    CHECK(p.betti == std::vector<long long>{0, 0, 0});
    REQUIRE(p.torsion.size() == 3);
    CHECK(p.torsion[1] == std::vector<Int>{2});  // Z/2 in degree 1
    CHECK(p.torsion[2].empty());
}

TEST_CASE("cones are acyclic") {
    for (const SimplicialComplex& base :
         {hollow_triangle(), octahedron(), rp2()}) {
        SimplicialComplex k = base.cone("apex");
        HomologyReport h = homology(k, k.dimension());
        CHECK(h.trivial_through(k.dimension()));
        CHECK(k.euler_characteristic() == 0);
    }
}

TEST_CASE("euler characteristic equals the alternating betti sum") {
    for (const SimplicialComplex& c : {octahedron(), hollow_triangle(), rp2()}) {
        HomologyReport h = homology(c, c.dimension());
        long long chi = 0, sign = 1;
        for (long long b : h.betti) {
            chi += sign * b;
            sign = -sign;
        }
        CHECK(chi == c.euler_characteristic());
    }
}

TEST_CASE("homological connectivity") {
    CHECK(homological_connectivity(octahedron(), 1).pass);
    CHECK_FALSE(homological_connectivity(octahedron(), 2).pass);
    CHECK(homological_connectivity(octahedron(), 2).first_failing_dim == 2);
    CHECK_FALSE(
        homological_connectivity(SimplicialComplex(std::vector<std::string>{}),
                                 -1)
            .pass);
    SimplicialComplex pt({"a"});
    pt.add_face_labels({"a"});
    CHECK(homological_connectivity(pt, -1).pass);
}

TEST_CASE("Cohen-Macaulay checks") {
    CHECK(is_cohen_macaulay(octahedron(), 2).pass);
    CHECK(is_cohen_macaulay(hollow_triangle(), 1).pass);
    // two triangles glued at a vertex: the glue-point link is disconnected
    SimplicialComplex wedge = SimplicialComplex::from_maximal(
        {"p", "a", "b", "c", "d"}, {{"p", "a", "b"}, {"p", "c", "d"}});
    CmCertificate bad = is_cohen_macaulay(wedge, 2);
    CHECK_FALSE(bad.pass);
    // wrong dimension also fails
    CHECK_FALSE(is_cohen_macaulay(octahedron(), 3).pass);
}

TEST_CASE("complete join verification: octahedron over the triangle") {
    SimplicialComplex tri = SimplicialComplex::from_maximal(
        {"x", "y", "z"}, {{"x", "y", "z"}});
    std::map<std::string, std::string> proj{{"x+", "x"}, {"x-", "x"},
                                            {"y+", "y"}, {"y-", "y"},
                                            {"z+", "z"}, {"z-", "z"}};
    JoinVerdict ok = verify_complete_join(octahedron(), tri, proj);
    CHECK(ok.pass);

    // removing a top face breaks completeness
    SimplicialComplex broken({"x+", "x-", "y+", "y-", "z+", "z-"});
    bool skipped_one = false;
    for (const char* x : {"x+", "x-"})
        for (const char* y : {"y+", "y-"})
            for (const char* z : {"z+", "z-"}) {
                if (!skipped_one) {
                    skipped_one = true;
                    continue;
                }
                broken.add_face_labels({x, y, z});
            }
    JoinVerdict bad = verify_complete_join(broken, tri, proj);
    CHECK_FALSE(bad.pass);
    CHECK(bad.failed_condition == 4);

    // collapsing a fiber to the same simplex breaks injectivity there
    std::map<std::string, std::string> squash = proj;
    squash["x-"] = "y";
    JoinVerdict inj = verify_complete_join(octahedron(), tri, squash);
    CHECK_FALSE(inj.pass);
}

TEST_CASE("labeling systems build complete joins") {
    SimplicialComplex edge =
        SimplicialComplex::from_maximal({"x", "y"}, {{"x", "y"}});
    LabelingSystem ls;
    int x = edge.index_of("x"), y = edge.index_of("y");
    ls.labels[{x, {x}}] = {"l1", "l2"};
    ls.labels[{y, {y}}] = {"m1", "m2"};
    ls.labels[{x, {x, y}}] = {"l1"};
    ls.labels[{y, {x, y}}] = {"m1", "m2"};
    SimplicialComplex built = build_from_labeling(edge, ls);
    CHECK(built.vertex_count() == 4);
    CHECK(built.faces_of_dim(1).size() == 2);  // l1 pairs with m1 and m2
    CHECK(built.has_face({built.index_of("x|l1"), built.index_of("y|m2")}));
    CHECK_FALSE(built.has_face({built.index_of("x|l2"), built.index_of("y|m1")}));

    // labels must shrink as the face grows
    LabelingSystem badls = ls;
    badls.labels[{x, {x, y}}] = {"l3"};
    CHECK_THROWS_AS(build_from_labeling(edge, badls), domain_error);
}

TEST_CASE("semisimplicial identities") {
    // a single 1-simplex with two distinct vertices
    SemiSimplicialSet s;
    s.set_levels({{"v0", "v1"}, {"e"}});
    s.set_face(1, 0, {1});  // d_0 e = v1
    s.set_face(1, 1, {0});  // d_1 e = v0
    CHECK_FALSE(s.check_identities().has_value());

    // a 2-simplex with inconsistent face tables must be caught
    SemiSimplicialSet bad;
    bad.set_levels({{"v0", "v1", "v2"}, {"e01", "e02", "e12"}, {"t"}});
    bad.set_face(1, 0, {1, 2, 2});
    bad.set_face(1, 1, {0, 0, 1});
    bad.set_face(2, 0, {2});  // d_0 t = e12
    bad.set_face(2, 1, {1});  // d_1 t = e02
    bad.set_face(2, 2, {1});  // wrong: should be e01
    CHECK(bad.check_identities().has_value());
    bad.set_face(2, 2, {0});
    CHECK_FALSE(bad.check_identities().has_value());
}
