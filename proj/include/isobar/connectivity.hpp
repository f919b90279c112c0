#pragma once

#include <optional>
#include <vector>

#include "isobar/planar_map.hpp"

namespace isobar {

// A nontrivial cut: an edge set whose removal leaves exactly two connected
// components, each with at least 3 vertices.  side_a is the component
// containing the smallest vertex id.
struct NontrivialCut {
    std::vector<Edge> edges;  // sorted
    std::vector<int> side_a;  // ascending
    std::vector<int> side_b;

    bool operator==(const NontrivialCut& other) const { return edges == other.edges; }
};

// Quasi-connectivity: the smallest size q of a nontrivial cut, with the
// complete list of cuts achieving it (deduplicated, ordered lexicographically
// by edge list).  Every minimum-size removal set that qualifies is exactly
// the boundary of its two sides.
struct QuasiConnectivity {
    int q = 0;
    std::vector<NontrivialCut> cuts;
};

// Searches cut sizes k = 1, 2, ... exhaustively.  Returns nullopt for maps
// with fewer than 6 vertices (no nontrivial cut can exist).  Throws
// BudgetError when no cut of size <= ceiling exists — a definite negative
// would need unbounded search.
std::optional<QuasiConnectivity> quasi_connectivity(const PlanarMap& map,
                                                    int ceiling = 6);

// True for cubic bridgeless maps: every vertex has degree 3 and no single
// edge disconnects the graph.
bool is_map(const PlanarMap& map);

// Cut edges (bridges), sorted.
std::vector<Edge> bridges(const PlanarMap& map);

} // namespace isobar
