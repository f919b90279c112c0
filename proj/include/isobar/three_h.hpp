#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "isobar/hamiltonian.hpp"
#include "isobar/planar_map.hpp"

namespace isobar {

// A cubic map is 3H when some proper 3-edge-coloring has all three unions
// of two color classes Hamiltonian.  cycles[k] is the union of the two
// classes other than k, so an edge of color c lies on every cycle except
// cycle c.
//
// Face colors derive from the cycles: each edge lies on exactly two of the
// three, so every face is inside either none or exactly two of them.  A
// face inside none (the outer face always is) gets color 0; a face inside
// two gets color k+1 for the unique cycle k NOT containing it.  The result
// is a proper 4-coloring of the faces, and an edge between colors i and j
// always carries color |i+j−3| up to a renaming of the edge colors.
//
// sigma[i] is the total weight of the color-i faces; the three weight
// balances across the cycles force all four sigmas equal.
struct ThreeHFactorization {
    std::map<Edge, int> edge_colors;       // proper; classes are perfect matchings
    std::vector<HamiltonianCycle> cycles;  // size 3
    std::vector<int> face_colors;          // by face id, in {0,1,2,3}
    std::array<int, 4> sigma{};
};

// Exhaustive backtracking over proper 3-edge-colorings (edge classes fixed
// up to renaming by anchoring the colors at vertex 0), pruning any partial
// coloring that closes a premature two-color cycle.  Returns the first
// factorization in the deterministic search order, or nullopt when none
// exists.  Throws ValidationError on non-cubic input and BudgetError when
// the search exceeds `budget` expansions.
std::optional<ThreeHFactorization>
find_3h_factorization(const PlanarMap& map, std::uint64_t budget = 50'000'000);

// Face colors as described above, recomputed from three Hamiltonian cycles
// that pairwise share a perfect matching.  Throws ValidationError when the
// cycles do not fit the map or some face is inside exactly one or three of
// them (impossible for a genuine factorization).
std::vector<int> face_nesting_colors(const PlanarMap& map,
                                     const std::vector<HamiltonianCycle>& cycles);

// The edge-color rule |i + j − 3| for an edge between faces colored i and
// j.  Throws ValidationError when i = j (improper face coloring).
int edge_color_from_face_colors(int i, int j);

// Re-verify a factorization end to end: face colors match a recomputation
// from the cycles, the |i+j−3| rule reproduces the edge coloring under some
// renaming, each cycle's weight balance holds, and all four sigmas agree.
bool verify_corollary(const PlanarMap& map, const ThreeHFactorization& fact);

} // namespace isobar
