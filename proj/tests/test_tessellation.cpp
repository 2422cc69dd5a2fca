#include <doctest.h>

#include <map>
#include <set>

#include "gcurv/generators.hpp"
#include "gcurv/tessellation.hpp"
#include "oracles.hpp"

using namespace gcurv;

namespace {

std::multiset<int> face_degrees(const Tessellation& t) {
    std::multiset<int> out;
    for (const auto& f : t.faces) out.insert(f.degree());
    return out;
}

// the hexagonal bipyramid: apexes 0 (north) and 1 (south), equator 2..7;
// apex curvature is exactly 0, so it exercises the NotApplicable branch
Tessellation bipyramid6() {
    std::vector<std::pair<Vertex, Vertex>> e;
    auto eq = [](int i) { return 2 + ((i % 6) + 6) % 6; };
    for (int i = 0; i < 6; ++i) {
        e.emplace_back(0, eq(i));
        e.emplace_back(1, eq(i));
        e.emplace_back(eq(i), eq(i + 1));
    }
    Graph g = Graph::from_edge_list(8, e);
    std::vector<std::vector<Vertex>> faces;
    for (int i = 0; i < 6; ++i) {
        faces.push_back({0, eq(i), eq(i + 1)});
        faces.push_back({1, eq(i + 1), eq(i)});
    }
    auto rot = rotation_from_oriented_faces(g, faces);
    return make_tessellation(std::move(g), std::move(rot));
}

}  // namespace

TEST_CASE("face tracing") {
    auto c6 = cycle_tessellation(6);
    CHECK(c6.faces.size() == 2);
    CHECK(face_degrees(c6) == std::multiset<int>{6, 6});

    auto cube = prism_tessellation(4);
    CHECK(cube.faces.size() == 6);
    CHECK(face_degrees(cube) == std::multiset<int>{4, 4, 4, 4, 4, 4});

    auto k4 = tetrahedron_tessellation();
    CHECK(k4.faces.size() == 4);
    CHECK(face_degrees(k4) == std::multiset<int>{3, 3, 3, 3});

    auto ico = icosahedron_tessellation();
    CHECK(ico.graph.vertex_count() == 12);
    CHECK(ico.graph.edge_count() == 30);
    CHECK(ico.faces.size() == 20);
    for (const auto& f : ico.faces) CHECK(f.degree() == 3);

    // every directed edge consumed exactly once: sum of face degrees is 2|E|
    for (const auto& t : {c6, cube, k4, ico, prism_tessellation(7),
                          antiprism_tessellation(5)}) {
        int total = 0;
        for (const auto& f : t.faces) total += f.degree();
        CHECK(total == 2 * t.graph.edge_count());
    }

    // prism faces: two n-gons and n quadrilaterals
    auto p7 = prism_tessellation(7);
    std::multiset<int> expect{7, 7, 4, 4, 4, 4, 4, 4, 4};
    CHECK(face_degrees(p7) == expect);
    // antiprism faces: two n-gons and 2n triangles
    auto a5 = antiprism_tessellation(5);
    std::multiset<int> expect_a{5, 5, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3};
    CHECK(face_degrees(a5) == expect_a);

    RotationSystem bad = {{1, 1}, {0}, {0}};
    CHECK_THROWS_AS(faces_from_rotation(path(3), bad), InvalidRotationError);
}

#include "gcurv/json_io.hpp"

TEST_CASE("face export") {
    auto k4 = tetrahedron_tessellation();
    auto text = faces_to_json(k4.faces);
    CHECK(text.find("[[") == 0);
    // four cycles of three vertices each
    size_t count = 0;
    for (size_t pos = 1; (pos = text.find('[', pos)) != std::string::npos; ++pos)
        ++count;
    CHECK(count == 4);
}

TEST_CASE("tessellation conditions") {
    auto cube = check_tessellation(prism_tessellation(4));
    CHECK(cube.valid());

    // a tree's single face walks every edge twice: fails (i) and (ii)
    auto p3 = path(3);
    RotationSystem rot = {{1}, {0, 2}, {1}};
    auto tree = make_tessellation(p3, rot);
    CHECK(tree.faces.size() == 1);
    auto rep = check_tessellation(tree);
    CHECK(!rep.boundaries_simple);
    CHECK(!rep.edge_in_two_faces);

    // theta graph: two quadrilateral faces share two edges, violating (iii)
    auto theta = check_tessellation(theta_tessellation());
    CHECK(!theta.face_intersections_ok);

    // the doubled triangle (a 3-cycle's two faces) shares all three edges
    auto c3 = check_tessellation(cycle_tessellation(3));
    CHECK(!c3.face_intersections_ok);
    CHECK(!c3.degree_bounds);

    for (int n : {3, 5, 8, 12}) {
        CHECK(check_tessellation(prism_tessellation(n)).valid());
        CHECK(check_tessellation(antiprism_tessellation(n)).valid());
    }
    CHECK(check_tessellation(tetrahedron_tessellation()).valid());
    CHECK(check_tessellation(icosahedron_tessellation()).valid());
    CHECK(check_tessellation(bipyramid6()).valid());
}

TEST_CASE("corner and vertex curvature") {
    auto cube = prism_tessellation(4);
    // every cube corner: 1/3 + 1/4 - 1/2 = 1/12
    for (int fi = 0; fi < 6; ++fi)
        for (Vertex v : cube.faces[fi].boundary)
            CHECK(corner_curvature(cube, v, fi) == Rat(1, 12));

    // flat square-grid corner d_v = d_f = 4: the antiprism's square face
    auto a4 = antiprism_tessellation(4);
    for (int fi = 0; fi < static_cast<int>(a4.faces.size()); ++fi)
        if (a4.faces[fi].degree() == 4)
            CHECK(corner_curvature(a4, a4.faces[fi].boundary[0], fi) == Rat(0));

    CHECK_THROWS_AS(corner_curvature(cube, 0, 99), NotIncidentError);
    // vertex 0 and its antipode never share a face
    bool threw = false;
    for (int fi = 0; fi < 6; ++fi) {
        const auto& b = cube.faces[fi].boundary;
        if (std::find(b.begin(), b.end(), 0) == b.end()) {
            CHECK_THROWS_AS(corner_curvature(cube, 0, fi), NotIncidentError);
            threw = true;
            break;
        }
    }
    CHECK(threw);

    for (int n = 3; n <= 12; ++n) {
        auto p = prism_tessellation(n);
        auto a = antiprism_tessellation(n);
        for (Vertex v = 0; v < 2 * n; ++v) {
            CHECK(vertex_curvature(p, v) == Rat(1, n));
            CHECK(vertex_curvature(a, v) == Rat(1, n));
        }
    }
    for (Vertex v = 0; v < 8; ++v)
        CHECK(vertex_curvature(prism_tessellation(4), v) == Rat(1, 4));
    for (Vertex v = 0; v < 12; ++v)
        CHECK(vertex_curvature(icosahedron_tessellation(), v) == Rat(1, 6));
}

TEST_CASE("gauss-bonnet") {
    CHECK(gauss_bonnet_sum(prism_tessellation(6)) == Rat(2));
    CHECK(gauss_bonnet_sum(antiprism_tessellation(8)) == Rat(2));
    CHECK(gauss_bonnet_sum(tetrahedron_tessellation()) == Rat(2));
    CHECK(gauss_bonnet_sum(icosahedron_tessellation()) == Rat(2));
    CHECK(gauss_bonnet_sum(bipyramid6()) == Rat(2));
    CHECK_THROWS_AS(gauss_bonnet_sum(theta_tessellation()), InvalidTessellationError);
}

TEST_CASE("cut locus") {
    CHECK(cut_locus(path(3), 0) == std::vector<Vertex>{2});
    CHECK(cut_locus(cycle(6), 0) == std::vector<Vertex>{3});
    CHECK(cut_locus(complete(4), 0) == std::vector<Vertex>{1, 2, 3});
    auto two_edges = Graph::from_edge_list(4,
        std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {2, 3}});
    CHECK_THROWS_AS(cut_locus(two_edges, 0), DisconnectedError);

    // exhaustive check of the local-maximum property on the cube
    auto q3 = hypercube(3);
    for (Vertex v0 = 0; v0 < 8; ++v0) {
        auto d = bfs_distances(q3, v0);
        for (Vertex v : cut_locus(q3, v0))
            for (Vertex w : q3.neighbors(v)) CHECK(d[v] >= d[w]);
    }
}

TEST_CASE("cheeger constant") {
    auto k2 = complete(2);
    CHECK(cheeger_constant(k2).value == Rat(1));

    auto db = cheeger_constant(dumbbell(3, 3));
    CHECK(db.value == Rat(1, 7));
    // witness is a K3 side: one boundary edge, volume 7
    CHECK(db.witness.size() == 3);

    CHECK(cheeger_constant(cycle(6)).value == Rat(1, 3));

    CHECK_THROWS_AS(cheeger_constant(hypercube(5)), TooLargeError);
    auto two_edges = Graph::from_edge_list(4,
        std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {2, 3}});
    CHECK_THROWS_AS(cheeger_constant(two_edges), DisconnectedError);

    // independent naive oracle
    for (const Graph& g : {complete(5), cycle(9), prism(4), dumbbell(4, 3), antitree(4),
                           hypercube(3)})
        CHECK(cheeger_constant(g).value == oracles::cheeger_naive(g));

    // the witness really attains the reported ratio
    for (const Graph& g : {dumbbell(3, 3), prism(5)}) {
        auto res = cheeger_constant(g);
        std::set<Vertex> w(res.witness.begin(), res.witness.end());
        long boundary = 0, vol = 0;
        for (Vertex v : w) {
            vol += g.degree(v);
            for (Vertex z : g.neighbors(v))
                if (!w.count(z)) ++boundary;
        }
        CHECK(Rat(boundary, vol) == res.value);
        CHECK(2 * static_cast<int>(w.size()) <= g.vertex_count());
    }
}

TEST_CASE("higuchi classification") {
    auto p100 = higuchi_classify(prism_tessellation(100));
    CHECK(p100.kind == HiguchiClassification::Kind::Prism);
    CHECK(p100.parameter == 100);

    auto a50 = higuchi_classify(antiprism_tessellation(50));
    CHECK(a50.kind == HiguchiClassification::Kind::Antiprism);
    CHECK(a50.parameter == 50);

    auto ico = higuchi_classify(icosahedron_tessellation());
    CHECK(ico.kind == HiguchiClassification::Kind::SmallGraph);
    CHECK(ico.parameter == 12);

    auto k4 = higuchi_classify(tetrahedron_tessellation());
    CHECK(k4.kind == HiguchiClassification::Kind::SmallGraph);

    // cube and octahedron fold into the prism/antiprism families
    CHECK(higuchi_classify(prism_tessellation(4)).kind ==
          HiguchiClassification::Kind::Prism);
    CHECK(higuchi_classify(antiprism_tessellation(3)).kind ==
          HiguchiClassification::Kind::Antiprism);

    // bipyramid apexes have curvature exactly 0
    CHECK(higuchi_classify(bipyramid6()).kind ==
          HiguchiClassification::Kind::NotApplicable);
}

TEST_CASE("hyperbolic patch isoperimetry") {
    auto patch = heptagon_patch();
    CHECK(patch.tess.graph.vertex_count() == 35);
    CHECK(patch.tess.graph.edge_count() == 42);
    CHECK(patch.tess.faces.size() == 9);
    CHECK(patch.interior_corner_curvature == Rat(-1, 42));

    // interior corners all carry the constant negative curvature
    std::multiset<int> degs = face_degrees(patch.tess);
    CHECK(degs.count(7) == 8);
    CHECK(degs.count(28) == 1);
    for (Vertex v : patch.interior) {
        int corners = 0;
        for (int fi = 0; fi < static_cast<int>(patch.tess.faces.size()); ++fi) {
            const auto& b = patch.tess.faces[fi].boundary;
            if (std::find(b.begin(), b.end(), v) != b.end()) {
                CHECK(corner_curvature(patch.tess, v, fi) ==
                      patch.interior_corner_curvature);
                ++corners;
            }
        }
        CHECK(corners == 3);
    }

    // isoperimetric bound: |boundary| / vol(W) >= 2*K0 for every nonempty
    // subset of interior vertices (the witness sets that stay away from the
    // truncation boundary)
    Rat bound = -2 * patch.interior_corner_curvature;
    const Graph& g = patch.tess.graph;
    int k = static_cast<int>(patch.interior.size());
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        std::set<Vertex> w;
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1) w.insert(patch.interior[i]);
        long boundary = 0, vol = 0;
        for (Vertex v : w) {
            vol += g.degree(v);
            for (Vertex z : g.neighbors(v))
                if (!w.count(z)) ++boundary;
        }
        CHECK(Rat(boundary, vol) >= bound);
    }
}
