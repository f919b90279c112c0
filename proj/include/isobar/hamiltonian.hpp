#pragma once

#include <array>
#include <vector>

#include "isobar/planar_map.hpp"

namespace isobar {

// A Hamiltonian cycle stored in canonical vertex order: starts at vertex 0
// and the second vertex is smaller than the last, so each cycle has exactly
// one representation (rotations and reflections collapse).  Construction
// validates the sequence against the map and throws ValidationError if it
// is not a Hamiltonian cycle.
class HamiltonianCycle {
  public:
    HamiltonianCycle(const PlanarMap& map, std::vector<int> order);

    const std::vector<int>& order() const { return order_; }
    int length() const { return static_cast<int>(order_.size()); }

    bool contains_edge(Edge e) const;
    // Cycle edges, sorted.
    const std::vector<Edge>& edges() const { return edges_; }

    bool operator==(const HamiltonianCycle& other) const { return order_ == other.order_; }
    bool operator<(const HamiltonianCycle& other) const { return order_ < other.order_; }

  private:
    std::vector<int> order_;
    std::vector<Edge> edges_;
};

// True iff `order` visits every vertex exactly once along edges of the map,
// in any rotation or direction (canonical form not required).
bool is_hamiltonian_cycle(const PlanarMap& map, const std::vector<int>& order);

// Face ids on each side of a Hamiltonian cycle, as (inner, outer).  The
// cycle is a closed curve on the sphere, so the faces split into exactly two
// nonempty sides; two faces share a side iff they are connected through
// non-cycle edges.  The outer side is the one containing the outer face.
std::pair<std::vector<int>, std::vector<int>>
cycle_side_faces(const PlanarMap& map, const HamiltonianCycle& cycle);

// The dual cut induced by a Hamiltonian cycle.  Dual edges are identified by
// the primal edges they cross: cut_edges are the cycle edges, and each
// side's internal dual edges are that side's chords.  Both side components
// are trees — connected with chord count = face count − 1; construction
// verifies this and throws ValidationError otherwise.
struct DualCut {
    std::vector<Edge> cut_edges;                 // cycle edges, sorted
    std::array<std::vector<int>, 2> side_faces;  // face ids, (inner, outer)
    std::array<std::vector<Edge>, 2> side_chords; // chords per side, sorted
};

DualCut dual_cut_of_cycle(const PlanarMap& map, const HamiltonianCycle& cycle);

} // namespace isobar
