#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "isobar/construct.hpp"
#include "isobar/errors.hpp"
#include "isobar/oracle.hpp"
#include "isobar/planar_map.hpp"
#include "test_util.hpp"

using namespace isobar;
using namespace testutil;

TEST_CASE("fixture censuses") {
    const PlanarMap tetra = fixture("tetrahedron");
    CHECK(tetra.vertex_count() == 4);
    CHECK(tetra.edge_count() == 6);
    CHECK(tetra.face_count() == 4);
    CHECK(length_census(tetra) == std::vector<int>{3, 3, 3, 3});

    const PlanarMap cube = fixture("cube");
    CHECK(cube.vertex_count() == 8);
    CHECK(cube.edge_count() == 12);
    CHECK(cube.face_count() == 6);
    CHECK(length_census(cube) == std::vector<int>(6, 4));

    const PlanarMap dodeca = fixture("dodecahedron");
    CHECK(dodeca.vertex_count() == 20);
    CHECK(dodeca.edge_count() == 30);
    CHECK(dodeca.face_count() == 12);
    CHECK(length_census(dodeca) == std::vector<int>(12, 5));

    const PlanarMap tutte = fixture("tutte");
    CHECK(tutte.vertex_count() == 46);
    CHECK(tutte.edge_count() == 69);
    CHECK(tutte.face_count() == 25);
}

TEST_CASE("Euler holds for every suite map") {
    for (const auto& [name, m] : partition_suite()) {
        CAPTURE(name);
        CHECK(m.vertex_count() - m.edge_count() + m.face_count() == 2);
    }
}

TEST_CASE("tetrahedron serializes canonically") {
    const std::string golden =
        "planarmap 1\n"
        "V 4\n"
        "0: 3 1 3 2\n"
        "1: 3 0 2 3\n"
        "2: 3 1 0 3\n"
        "3: 3 2 0 1\n"
        "outer: 0 1\n";
    CHECK(serialize_map(fixture("tetrahedron")) == golden);
    CHECK(serialize_map(parse_map(golden)) == golden);
}

TEST_CASE("parse then serialize round-trips every suite map") {
    auto maps = partition_suite();
    maps.push_back({"tutte", fixture("tutte")});
    maps.push_back({"onion", onion()});
    maps.push_back({"bridge_map", bridge_map()});
    for (const auto& [name, m] : maps) {
        CAPTURE(name);
        CHECK(parse_map(serialize_map(m)) == m);
    }
}

TEST_CASE("comments and the outer line are honored") {
    const std::string text =
        "# a triangle ring\n"
        "planarmap 1\n"
        "V 3\n"
        "0: 2 1 2\n"
        "# interior comment\n"
        "1: 2 2 0\n"
        "2: 2 0 1\n";
    const PlanarMap m = parse_map(text);
    CHECK(m.face_count() == 2);
    CHECK(m.outer_face() == 0); // no outer line: face of the smallest dart

    const PlanarMap flipped = parse_map(text + "outer: 1 0\n");
    CHECK(flipped.outer_face() == flipped.face_left_of({1, 0}));
    CHECK(flipped.outer_face() != flipped.face_left_of({0, 1}));
}

TEST_CASE("parse rejects malformed documents") {
    CHECK_THROWS_AS(parse_map(""), ParseError);
    CHECK_THROWS_AS(parse_map("planarmap 2\nV 1\n0: 2 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_map("planarmap 1\nV 3\n0: 2 1 2\n1: 2 2 0\n"), ParseError);
    CHECK_THROWS_AS(
        parse_map("planarmap 1\nV 3\n0: 3 1 2\n1: 2 2 0\n2: 2 0 1\n"), ParseError);
    CHECK_THROWS_AS(
        parse_map("planarmap 1\nV 3\n0: 2 1 2\n1: 2 2 0\n2: 2 0 1\nextra\n"), ParseError);
}

TEST_CASE("validation rejects broken structures") {
    // asymmetric adjacency
    CHECK_THROWS_AS(
        parse_map("planarmap 1\nV 3\n0: 2 1 2\n1: 1 2\n2: 2 0 1\n"), ValidationError);
    // degree-1 vertex
    CHECK_THROWS_AS(parse_map("planarmap 1\nV 2\n0: 1 1\n1: 1 0\n"), ValidationError);
    // self-loop
    CHECK_THROWS_AS(
        parse_map("planarmap 1\nV 2\n0: 2 0 1\n1: 2 0 0\n"), ValidationError);
    // repeated neighbor
    CHECK_THROWS_AS(
        parse_map("planarmap 1\nV 2\n0: 2 1 1\n1: 2 0 0\n"), ValidationError);
    // disconnected
    CHECK_THROWS_AS(parse_map("planarmap 1\nV 6\n0: 2 1 2\n1: 2 2 0\n2: 2 0 1\n"
                              "3: 2 4 5\n4: 2 5 3\n5: 2 3 4\n"),
                    ValidationError);
    // K5: no rotation system is planar, Euler must fail
    CHECK_THROWS_AS(parse_map("planarmap 1\nV 5\n0: 4 1 2 3 4\n1: 4 2 3 4 0\n"
                              "2: 4 3 4 0 1\n3: 4 4 0 1 2\n4: 4 0 1 2 3\n"),
                    ValidationError);
}

TEST_CASE("face orbits match an independent walker") {
    auto maps = partition_suite();
    maps.push_back({"tutte", fixture("tutte")});
    maps.push_back({"onion", onion()});
    maps.push_back({"bridge_map", bridge_map()});
    for (const auto& [name, m] : maps) {
        CAPTURE(name);
        CHECK(length_census(m) == orbit_lengths(m.rotations()));
    }
}

TEST_CASE("face successor consumes every dart exactly once") {
    for (const auto& [name, m] : partition_suite()) {
        CAPTURE(name);
        std::set<Dart> darts;
        int total = 0;
        for (const auto& f : m.faces())
            for (const Dart& d : f.boundary) {
                darts.insert(d);
                ++total;
                CHECK(m.face_left_of(d) == f.id);
                CHECK(m.face_successor(d).first == d.second);
            }
        CHECK(total == 2 * m.edge_count());
        CHECK(static_cast<int>(darts.size()) == total);
        for (const Edge& e : m.edges()) {
            const auto [l, r] = m.faces_of_edge(e);
            CHECK(l == m.face_left_of({e.first, e.second}));
            CHECK(r == m.face_left_of({e.second, e.first}));
        }
    }
}

TEST_CASE("face boundaries of 3-connected fixtures are simple cycles") {
    for (const char* name : {"tetrahedron", "cube", "dodecahedron", "tutte"}) {
        CAPTURE(name);
        const PlanarMap m = fixture(name);
        for (const auto& f : m.faces()) {
            auto vs = f.vertices();
            std::sort(vs.begin(), vs.end());
            CHECK(std::adjacent_find(vs.begin(), vs.end()) == vs.end());
        }
    }
}

TEST_CASE("face vertex helpers") {
    const PlanarMap tetra = fixture("tetrahedron");
    const Face& f = tetra.face(0);
    CHECK(f.length() == 3);
    CHECK(f.vertices().size() == 3);
    for (int v : f.vertices()) CHECK(f.contains_vertex(v));
    int outside = 0;
    for (int v = 0; v < 4; ++v)
        if (!f.contains_vertex(v)) ++outside;
    CHECK(outside == 1);
}

TEST_CASE("duals of the platonic fixtures") {
    const PlanarMap tetra = fixture("tetrahedron");
    CHECK(isomorphic(dual(tetra), tetra)); // self-dual

    const PlanarMap cube = fixture("cube");
    const PlanarMap cube_dual = dual(cube);
    CHECK(isomorphic(cube_dual, octahedron()));
    CHECK(isomorphic(dual(octahedron()), cube));

    const PlanarMap ico = dual(fixture("dodecahedron"));
    CHECK(ico.vertex_count() == 12);
    CHECK(ico.edge_count() == 30);
    for (int v = 0; v < 12; ++v) CHECK(ico.degree(v) == 5);
}

TEST_CASE("dual vertex and face counts swap") {
    for (const char* name : {"tetrahedron", "cube", "dodecahedron", "tutte"}) {
        CAPTURE(name);
        const PlanarMap m = fixture(name);
        const PlanarMap d = dual(m);
        CHECK(d.vertex_count() == m.face_count());
        CHECK(d.face_count() == m.vertex_count());
        CHECK(d.edge_count() == m.edge_count());
        // dual degree = primal face length
        for (const auto& f : m.faces()) CHECK(d.degree(f.id) == f.length());
        CHECK(isomorphic(dual(d), m));
    }
}

TEST_CASE("dual refuses multiedges") {
    // the bowtie's outer face shares two edges with each triangle
    CHECK_THROWS_AS(dual(bowtie()), ValidationError);
}

TEST_CASE("map_from_faces validates its cover") {
    // dropping a face leaves edges covered once
    CHECK_THROWS_AS(
        map_from_faces(4, {{0, 1, 2}, {0, 3, 1}, {1, 3, 2}}), ValidationError);
    // repeating a face covers its edges four times
    CHECK_THROWS_AS(map_from_faces(4, {{0, 1, 2}, {0, 1, 2}, {0, 3, 1}, {1, 3, 2},
                                       {2, 3, 0}, {0, 1, 2}}),
                    ValidationError);
    // two triangles glued along all three edges form a valid dihedron
    const PlanarMap dihedron = map_from_faces(3, {{0, 1, 2}, {0, 1, 2}});
    CHECK(dihedron.vertex_count() == 3);
    CHECK(dihedron.edge_count() == 3);
    CHECK(dihedron.face_count() == 2);
    // an edge traversed twice in the same direction within one face cannot
    // be oriented by flipping
    CHECK_THROWS_AS(
        map_from_faces(4, {{0, 1, 2, 0, 1, 3}, {0, 2, 1, 3}}), ValidationError);
}

TEST_CASE("cycle side faces split as expected") {
    struct Expect {
        const char* name;
        int per_side;
    };
    for (const auto& [name, per_side] :
         {Expect{"tetrahedron", 2}, Expect{"cube", 3}, Expect{"dodecahedron", 6}}) {
        CAPTURE(name);
        const PlanarMap m = fixture(name);
        const auto cycles = enumerate_hamiltonian_cycles(m).cycles;
        REQUIRE(!cycles.empty());
        for (const auto& cycle : cycles) {
            const auto [inner, outer] = cycle_side_faces(m, cycle);
            CHECK(static_cast<int>(inner.size()) == per_side);
            CHECK(static_cast<int>(outer.size()) == per_side);
            CHECK(std::find(outer.begin(), outer.end(), m.outer_face()) != outer.end());
            // sides alternate exactly across cycle edges
            std::vector<char> is_inner(m.face_count(), 0);
            for (int f : inner) is_inner[f] = 1;
            for (const Edge& e : m.edges()) {
                const auto [l, r] = m.faces_of_edge(e);
                if (cycle.contains_edge(e))
                    CHECK(is_inner[l] != is_inner[r]);
                else
                    CHECK(is_inner[l] == is_inner[r]);
            }
        }
    }
}

TEST_CASE("dual cut of a Hamiltonian cycle separates two trees") {
    struct Expect {
        const char* name;
        int faces_per_side;
    };
    for (const auto& [name, per_side] :
         {Expect{"tetrahedron", 2}, Expect{"cube", 3}, Expect{"dodecahedron", 6}}) {
        CAPTURE(name);
        const PlanarMap m = fixture(name);
        for (const auto& cycle : enumerate_hamiltonian_cycles(m).cycles) {
            const DualCut cut = dual_cut_of_cycle(m, cycle); // validates tree shape
            CHECK(cut.cut_edges == cycle.edges());
            for (int side = 0; side < 2; ++side) {
                CHECK(static_cast<int>(cut.side_faces[side].size()) == per_side);
                CHECK(cut.side_chords[side].size() == cut.side_faces[side].size() - 1);
            }
        }
    }
}
