#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "isobar/connectivity.hpp"
#include "isobar/construct.hpp"
#include "isobar/errors.hpp"
#include "test_util.hpp"

using namespace isobar;
using namespace testutil;

namespace {

// Semantic validation: removing the cut edges must leave exactly the two
// listed components, each of size >= 3, and the cut must be their full border.
void check_cut_semantics(const PlanarMap& m, const NontrivialCut& cut) {
    REQUIRE(cut.side_a.size() >= 3);
    REQUIRE(cut.side_b.size() >= 3);
    CHECK(cut.side_a.size() + cut.side_b.size() ==
          static_cast<size_t>(m.vertex_count()));
    CHECK(std::is_sorted(cut.side_a.begin(), cut.side_a.end()));
    CHECK(cut.side_a.front() == 0);
    CHECK(std::is_sorted(cut.edges.begin(), cut.edges.end()));

    std::vector<char> in_a(m.vertex_count(), 0);
    for (int v : cut.side_a) in_a[v] = 1;
    // the edge list is exactly the border of the bipartition
    std::vector<Edge> border;
    for (const Edge& e : m.edges())
        if (in_a[e.first] != in_a[e.second]) border.push_back(e);
    CHECK(border == cut.edges);
    // each side is connected on its own
    for (int side = 0; side < 2; ++side) {
        const auto& verts = side == 0 ? cut.side_a : cut.side_b;
        std::set<int> pool(verts.begin(), verts.end());
        std::vector<int> stack{verts.front()};
        pool.erase(verts.front());
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : m.rotation(v))
                if (pool.erase(w)) stack.push_back(w);
        }
        CHECK(pool.empty());
    }
}

} // namespace

TEST_CASE("quasi-connectivity matches the bipartition oracle") {
    auto maps = partition_suite();
    maps.push_back({"onion", onion()});
    for (const auto& [name, m] : maps) {
        if (m.vertex_count() > 14) continue;
        CAPTURE(name);
        const auto oracle = brute_cuts(m);
        if (m.vertex_count() < 6) {
            CHECK(!oracle.has_value());
            CHECK(!quasi_connectivity(m).has_value());
            continue;
        }
        REQUIRE(oracle.has_value());
        const auto qc = oracle->q <= 6 ? quasi_connectivity(m)
                                       : quasi_connectivity(m, oracle->q);
        REQUIRE(qc.has_value());
        CHECK(qc->q == oracle->q);
        REQUIRE(qc->cuts.size() == oracle->cuts.size());
        for (size_t i = 0; i < oracle->cuts.size(); ++i) {
            CHECK(qc->cuts[i].edges == oracle->cuts[i]);
            check_cut_semantics(m, qc->cuts[i]);
        }
    }
}

TEST_CASE("known quasi-connectivity values") {
    const auto cube = quasi_connectivity(fixture("cube"));
    REQUIRE(cube.has_value());
    CHECK(cube->q == 4);
    CHECK(cube->cuts.size() == 3);

    const auto prism = quasi_connectivity(prism3());
    REQUIRE(prism.has_value());
    CHECK(prism->q == 3);
    CHECK(prism->cuts.size() == 1);

    const auto dk = quasi_connectivity(double_k4());
    REQUIRE(dk.has_value());
    CHECK(dk->q == 3);
    CHECK(dk->cuts.size() == 2);

    // exactly at the default ceiling: must still succeed
    const auto oct = quasi_connectivity(octahedron());
    REQUIRE(oct.has_value());
    CHECK(oct->q == 6);
    CHECK(oct->cuts.size() == 4);

    const auto on = quasi_connectivity(onion());
    REQUIRE(on.has_value());
    CHECK(on->q == 6);
    CHECK(on->cuts.size() == 2);
}

TEST_CASE("tutte's map splits three ways at size 3") {
    const PlanarMap tutte = fixture("tutte");
    const auto qc = quasi_connectivity(tutte);
    REQUIRE(qc.has_value());
    CHECK(qc->q == 3);
    REQUIRE(qc->cuts.size() == 3);
    for (const auto& cut : qc->cuts) {
        CHECK(cut.edges.size() == 3);
        check_cut_semantics(tutte, cut);
    }
    CHECK(std::is_sorted(qc->cuts.begin(), qc->cuts.end(),
                         [](const NontrivialCut& a, const NontrivialCut& b) {
                             return a.edges < b.edges;
                         }));
}

TEST_CASE("the dodecahedron's minimum cuts are faces and paths") {
    const auto qc = quasi_connectivity(fixture("dodecahedron"));
    REQUIRE(qc.has_value());
    CHECK(qc->q == 5);
    REQUIRE(qc->cuts.size() == 72);
    std::map<size_t, int> small_side_census;
    for (const auto& cut : qc->cuts) {
        check_cut_semantics(fixture("dodecahedron"), cut);
        ++small_side_census[std::min(cut.side_a.size(), cut.side_b.size())];
    }
    // 12 cuts isolate a pentagonal face, 60 isolate a path of three vertices
    CHECK(small_side_census == std::map<size_t, int>{{3, 60}, {5, 12}});
}

TEST_CASE("maps too small for a nontrivial cut") {
    CHECK(!quasi_connectivity(fixture("tetrahedron")).has_value());
    CHECK(!quasi_connectivity(bowtie()).has_value());
    CHECK(!quasi_connectivity(k23()).has_value());
}

TEST_CASE("the ceiling turns unbounded searches into errors") {
    CHECK_THROWS_AS(quasi_connectivity(octahedron(), 5), BudgetError);
    CHECK_THROWS_AS(quasi_connectivity(fixture("dodecahedron"), 2), BudgetError);
    CHECK_THROWS_AS(quasi_connectivity(fixture("cube"), 3), BudgetError);
    CHECK(quasi_connectivity(fixture("cube"), 4).has_value());
}

TEST_CASE("cut lists are deduplicated and ordered") {
    for (const char* name : {"cube", "dodecahedron", "tutte"}) {
        CAPTURE(name);
        const auto qc = quasi_connectivity(fixture(name));
        REQUIRE(qc.has_value());
        for (size_t i = 1; i < qc->cuts.size(); ++i)
            CHECK(qc->cuts[i - 1].edges < qc->cuts[i].edges);
    }
}

TEST_CASE("is_map means cubic and bridgeless") {
    CHECK(is_map(fixture("tetrahedron")));
    CHECK(is_map(fixture("cube")));
    CHECK(is_map(fixture("dodecahedron")));
    CHECK(is_map(fixture("tutte")));
    CHECK(is_map(prism3()));
    CHECK(!is_map(octahedron())); // 4-regular
    CHECK(!is_map(y_map()));      // has degree-2 vertices
    CHECK(!is_map(k23()));
    CHECK(!is_map(bridge_map()));

    auto maps = partition_suite();
    maps.push_back({"onion", onion()});
    maps.push_back({"bridge_map", bridge_map()});
    for (const auto& [name, m] : maps) {
        CAPTURE(name);
        bool cubic = true;
        for (int v = 0; v < m.vertex_count(); ++v)
            if (m.degree(v) != 3) cubic = false;
        CHECK(is_map(m) == (cubic && bridges(m).empty()));
    }
}

TEST_CASE("bridge detection") {
    CHECK(bridges(fixture("dodecahedron")).empty());
    CHECK(bridges(fixture("cube")).empty());
    CHECK(bridges(bowtie()).empty());
    CHECK(bridges(bridge_map()) == std::vector<Edge>{{2, 3}});
}
