#include "isobar/hamiltonian.hpp"

#include <algorithm>

#include "dsu.hpp"

namespace isobar {

bool is_hamiltonian_cycle(const PlanarMap& map, const std::vector<int>& order) {
    const int n = map.vertex_count();
    if (static_cast<int>(order.size()) != n || n < 3) return false;
    std::vector<char> seen(n, 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    for (int i = 0; i < n; ++i)
        if (!map.adjacent(order[i], order[(i + 1) % n])) return false;
    return true;
}

HamiltonianCycle::HamiltonianCycle(const PlanarMap& map, std::vector<int> order) {
    if (!is_hamiltonian_cycle(map, order))
        throw ValidationError("sequence is not a Hamiltonian cycle of the map");

    // Canonical form: start at vertex 0, second vertex smaller than last.
    const auto at0 = std::find(order.begin(), order.end(), 0);
    std::rotate(order.begin(), at0, order.end());
    if (order[1] > order.back())
        std::reverse(order.begin() + 1, order.end());
    order_ = std::move(order);

    const int n = length();
    edges_.reserve(n);
    for (int i = 0; i < n; ++i)
        edges_.push_back(edge_of(order_[i], order_[(i + 1) % n]));
    std::sort(edges_.begin(), edges_.end());
}

bool HamiltonianCycle::contains_edge(Edge e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

using detail::Dsu;

std::pair<std::vector<int>, std::vector<int>>
cycle_side_faces(const PlanarMap& map, const HamiltonianCycle& cycle) {
    Dsu dsu(map.face_count());
    for (const Edge& e : map.edges()) {
        if (cycle.contains_edge(e)) continue;
        const auto [f1, f2] = map.faces_of_edge(e);
        dsu.unite(f1, f2);
    }
    const int outer_root = dsu.find(map.outer_face());
    std::vector<int> inner, outer;
    for (int f = 0; f < map.face_count(); ++f)
        (dsu.find(f) == outer_root ? outer : inner).push_back(f);
    if (inner.empty())
        throw ValidationError("cycle does not separate the faces into two sides");
    // Exactly two sides: every inner face must share the inner root.
    const int inner_root = dsu.find(inner.front());
    for (int f : inner)
        if (dsu.find(f) != inner_root)
            throw ValidationError("cycle splits the faces into more than two sides");
    return {std::move(inner), std::move(outer)};
}

DualCut dual_cut_of_cycle(const PlanarMap& map, const HamiltonianCycle& cycle) {
    DualCut cut;
    cut.cut_edges = cycle.edges();
    auto [inner, outer] = cycle_side_faces(map, cycle);

    std::vector<int> side_of(map.face_count(), 1);
    for (int f : inner) side_of[f] = 0;
    for (const Edge& e : map.edges()) {
        if (cycle.contains_edge(e)) continue;
        const auto [f1, f2] = map.faces_of_edge(e);
        if (side_of[f1] != side_of[f2])
            throw ValidationError("chord crosses the cycle"); // cannot happen for a valid cycle
        cut.side_chords[side_of[f1]].push_back(e);
    }
    cut.side_faces = {std::move(inner), std::move(outer)};

    // Both components are trees: connected by construction (the side is one
    // union-find class), so the edge count must be face count minus one.
    for (int s = 0; s < 2; ++s)
        if (cut.side_chords[s].size() + 1 != cut.side_faces[s].size())
            throw ValidationError("dual side component is not a tree");
    return cut;
}

} // namespace isobar
