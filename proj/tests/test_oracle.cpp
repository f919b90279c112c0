#include <doctest.h>

#include <algorithm>
#include <vector>

#include "isobar/construct.hpp"
#include "isobar/errors.hpp"
#include "isobar/hamiltonian.hpp"
#include "isobar/oracle.hpp"
#include "test_util.hpp"

using namespace isobar;
using namespace testutil;

TEST_CASE("enumeration matches the permutation oracle on small maps") {
    for (const auto& [name, m] : oracle_suite()) {
        CAPTURE(name);
        const auto expected = perm_hamiltonian_cycles(m);
        const auto result = enumerate_hamiltonian_cycles(m);
        CHECK(result.status == (expected.empty() ? SearchResult::Status::none
                                                 : SearchResult::Status::found));
        REQUIRE(result.cycles.size() == expected.size());
        for (size_t i = 0; i < expected.size(); ++i)
            CHECK(result.cycles[i].order() == expected[i]);
    }
}

TEST_CASE("known cycle counts") {
    CHECK(enumerate_hamiltonian_cycles(fixture("tetrahedron")).cycles.size() == 3);
    CHECK(enumerate_hamiltonian_cycles(fixture("cube")).cycles.size() == 6);
    CHECK(enumerate_hamiltonian_cycles(fixture("dodecahedron")).cycles.size() == 30);
}

TEST_CASE("enumerated cycles are valid, canonical, and sorted") {
    auto maps = oracle_suite();
    maps.push_back({"dodecahedron", fixture("dodecahedron")});
    for (const auto& [name, m] : maps) {
        CAPTURE(name);
        const auto result = enumerate_hamiltonian_cycles(m);
        CHECK(std::is_sorted(result.cycles.begin(), result.cycles.end()));
        CHECK(std::adjacent_find(result.cycles.begin(), result.cycles.end()) ==
              result.cycles.end());
        for (const auto& cycle : result.cycles) {
            const auto& order = cycle.order();
            REQUIRE(cycle.length() == m.vertex_count());
            CHECK(is_hamiltonian_cycle(m, order));
            CHECK(order.front() == 0);
            CHECK(order[1] < order.back());
            CHECK(static_cast<int>(cycle.edges().size()) == m.vertex_count());
            CHECK(std::is_sorted(cycle.edges().begin(), cycle.edges().end()));
        }
    }
}

TEST_CASE("limit truncates without changing the prefix") {
    const PlanarMap dodeca = fixture("dodecahedron");
    const auto full = enumerate_hamiltonian_cycles(dodeca);
    const auto head = enumerate_hamiltonian_cycles(dodeca, 7);
    CHECK(head.status == SearchResult::Status::found);
    REQUIRE(head.cycles.size() == 7);
    for (int i = 0; i < 7; ++i) CHECK(head.cycles[i] == full.cycles[i]);
}

TEST_CASE("single-cycle search") {
    const PlanarMap tetra = fixture("tetrahedron");
    const auto hit = find_hamiltonian_cycle(tetra);
    REQUIRE(hit.status == SearchResult::Status::found);
    REQUIRE(hit.cycle.has_value());
    CHECK(is_hamiltonian_cycle(tetra, hit.cycle->order()));
    CHECK(hit.cycle->order().front() == 0);

    for (const auto& [name, m] : partition_suite()) {
        CAPTURE(name);
        const auto result = find_hamiltonian_cycle(m);
        if (m.vertex_count() <= 8)
            CHECK((result.status == SearchResult::Status::found) ==
                  !perm_hamiltonian_cycles(m).empty());
        if (result.status == SearchResult::Status::found)
            CHECK(is_hamiltonian_cycle(m, result.cycle->order()));
        else
            CHECK(!result.cycle.has_value());
    }
}

TEST_CASE("definite negatives") {
    for (const auto& [name, m] : {NamedMap{"tutte", fixture("tutte")},
                                  NamedMap{"y_map", y_map()},
                                  NamedMap{"subdivided_k4", subdivided_k4()}}) {
        CAPTURE(name);
        const auto result = find_hamiltonian_cycle(m);
        CHECK(result.status == SearchResult::Status::none);
        CHECK(!result.cycle.has_value());
        CHECK(is_hamiltonian(m) == std::optional<bool>(false));
    }
    CHECK(is_hamiltonian(fixture("cube")) == std::optional<bool>(true));
}

TEST_CASE("budget exhaustion is reported, not guessed") {
    const PlanarMap tutte = fixture("tutte");
    const auto starved = find_hamiltonian_cycle(tutte, 1);
    CHECK(starved.status == SearchResult::Status::budget_exhausted);
    CHECK(!starved.cycle.has_value());
    CHECK(starved.expansions <= 1);
    CHECK(is_hamiltonian(tutte, 1) == std::nullopt);
    CHECK(enumerate_hamiltonian_cycles(tutte, 100, 1).status ==
          SearchResult::Status::budget_exhausted);
}

TEST_CASE("search is deterministic") {
    const PlanarMap dodeca = fixture("dodecahedron");
    const auto a = find_hamiltonian_cycle(dodeca);
    const auto b = find_hamiltonian_cycle(dodeca);
    CHECK(a.expansions == b.expansions);
    CHECK(a.cycle->order() == b.cycle->order());
    const auto ea = enumerate_hamiltonian_cycles(dodeca);
    const auto eb = enumerate_hamiltonian_cycles(dodeca);
    CHECK(ea.expansions == eb.expansions);
}

TEST_CASE("cycle predicate accepts any rotation or reflection") {
    const PlanarMap cube = fixture("cube");
    const auto cycles = enumerate_hamiltonian_cycles(cube).cycles;
    REQUIRE(!cycles.empty());
    std::vector<int> order = cycles[0].order();

    std::vector<int> rotated(order.begin() + 3, order.end());
    rotated.insert(rotated.end(), order.begin(), order.begin() + 3);
    CHECK(is_hamiltonian_cycle(cube, rotated));

    std::vector<int> reversed(order.rbegin(), order.rend());
    CHECK(is_hamiltonian_cycle(cube, reversed));

    // the constructor canonicalizes both back to the same cycle
    CHECK(HamiltonianCycle(cube, rotated) == cycles[0]);
    CHECK(HamiltonianCycle(cube, reversed) == cycles[0]);
}

TEST_CASE("cycle predicate rejects non-cycles") {
    const PlanarMap cube = fixture("cube");
    CHECK(!is_hamiltonian_cycle(cube, {0, 1, 2, 3}));             // too short
    CHECK(!is_hamiltonian_cycle(cube, {0, 1, 2, 3, 0, 4, 5, 6})); // repeat
    CHECK(!is_hamiltonian_cycle(cube, {0, 1, 2, 3, 4, 5, 6, 7})); // 3-4 not an edge
    CHECK(!is_hamiltonian_cycle(cube, {}));
    CHECK_THROWS_AS(HamiltonianCycle(cube, {0, 1, 2, 3, 4, 5, 6, 7}), ValidationError);
    CHECK_THROWS_AS(HamiltonianCycle(cube, {0, 1, 2, 3}), ValidationError);
}
