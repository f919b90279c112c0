#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "isobar/hamiltonian.hpp"
#include "isobar/planar_map.hpp"

namespace isobar {

// Exact Hamiltonian cycle search by edge-state backtracking.  Edge states
// (required / excluded / undecided) are propagated: a vertex with two
// required edges excludes the rest, a vertex with fewer than two live edges
// fails, a vertex with exactly two live edges requires both.  Path endpoints
// are tracked to reject subcycles before the full length is reached.
//
// `budget` caps search-tree expansions; deterministic for a fixed map.
struct SearchResult {
    enum class Status { found, none, budget_exhausted };
    Status status;
    std::optional<HamiltonianCycle> cycle; // set iff status == found
    std::uint64_t expansions = 0;
};

SearchResult find_hamiltonian_cycle(const PlanarMap& map,
                                    std::uint64_t budget = 50'000'000);

// Decision form: nullopt when the budget ran out.
std::optional<bool> is_hamiltonian(const PlanarMap& map,
                                   std::uint64_t budget = 50'000'000);

// Up to `limit` distinct Hamiltonian cycles in canonical order (sorted by
// vertex sequence).  The search itself runs to exhaustion; `limit` only
// truncates the output.
struct EnumerationResult {
    SearchResult::Status status;
    std::vector<HamiltonianCycle> cycles;
    std::uint64_t expansions = 0;
};

EnumerationResult enumerate_hamiltonian_cycles(const PlanarMap& map,
                                               int limit = 100,
                                               std::uint64_t budget = 50'000'000);

} // namespace isobar
