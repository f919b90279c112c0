#include "isobar/connectivity.hpp"

#include <algorithm>
#include <string>

#include "dsu.hpp"

namespace isobar {

namespace {

// Components of the map minus the given edge subset (indices into
// map.edges()).  Returns the component label per vertex plus the sizes.
struct Components {
    std::vector<int> label;
    std::vector<int> size;
};

Components components_without(const PlanarMap& map, const std::vector<char>& removed) {
    detail::Dsu dsu(map.vertex_count());
    const std::vector<Edge>& edges = map.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (!removed[i]) dsu.unite(edges[i].first, edges[i].second);

    Components comps;
    comps.label.assign(map.vertex_count(), -1);
    for (int v = 0; v < map.vertex_count(); ++v) {
        const int root = dsu.find(v);
        if (comps.label[root] == -1) {
            comps.label[root] = static_cast<int>(comps.size.size());
            comps.size.push_back(0);
        }
        comps.label[v] = comps.label[root];
        ++comps.size[comps.label[v]];
    }
    return comps;
}

} // namespace

std::optional<QuasiConnectivity> quasi_connectivity(const PlanarMap& map, int ceiling) {
    const int n = map.vertex_count();
    if (n < 6) return std::nullopt; // both sides need >= 3 vertices
    if (ceiling < 1) throw ValidationError("cut size ceiling must be positive");

    const std::vector<Edge>& edges = map.edges();
    const int m = map.edge_count();
    std::vector<char> removed(m, 0);

    for (int k = 1; k <= std::min(ceiling, m); ++k) {
        QuasiConnectivity result;
        result.q = k;

        // All C(m, k) index subsets in lexicographic order; since edges are
        // sorted, the accepted cuts come out lexicographic as well.  Any
        // accepted set at the minimal k is exactly the boundary of its two
        // sides: an edge rejoining one side could be dropped, giving a
        // smaller qualifying set.
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            for (int i : idx) removed[i] = 1;
            const Components comps = components_without(map, removed);
            if (comps.size.size() == 2 && comps.size[0] >= 3 && comps.size[1] >= 3) {
                NontrivialCut cut;
                for (int i : idx) cut.edges.push_back(edges[i]);
                const int side_of_zero = comps.label[0];
                for (int v = 0; v < n; ++v)
                    (comps.label[v] == side_of_zero ? cut.side_a : cut.side_b).push_back(v);
                result.cuts.push_back(std::move(cut));
            }
            for (int i : idx) removed[i] = 0;

            int pos = k - 1;
            while (pos >= 0 && idx[pos] == m - k + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!result.cuts.empty()) return result;
    }
    throw BudgetError("no nontrivial cut of size <= " + std::to_string(ceiling) +
                      "; larger cuts were not searched");
}

std::vector<Edge> bridges(const PlanarMap& map) {
    const int n = map.vertex_count();
    std::vector<int> entry(n, -1), low(n, 0);
    std::vector<Edge> out;
    int timer = 0;

    // Iterative DFS; skipping the tree edge to the parent once keeps
    // parallel edges honest, though valid maps have none.
    struct Frame {
        int v;
        int parent;
        std::size_t next = 0;
        bool skipped_parent = false;
    };
    std::vector<Frame> stack;
    stack.push_back({0, -1});
    entry[0] = low[0] = timer++;
    while (!stack.empty()) {
        Frame& frame = stack.back();
        const auto& nbrs = map.rotation(frame.v);
        if (frame.next < nbrs.size()) {
            const int to = nbrs[frame.next++];
            if (to == frame.parent && !frame.skipped_parent) {
                frame.skipped_parent = true;
                continue;
            }
            if (entry[to] != -1) {
                low[frame.v] = std::min(low[frame.v], entry[to]);
                continue;
            }
            entry[to] = low[to] = timer++;
            stack.push_back({to, frame.v});
        } else {
            const int v = frame.v;
            const int parent = frame.parent;
            stack.pop_back();
            if (parent != -1) {
                low[parent] = std::min(low[parent], low[v]);
                if (low[v] > entry[parent]) out.push_back(edge_of(parent, v));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_map(const PlanarMap& map) {
    for (int v = 0; v < map.vertex_count(); ++v)
        if (map.degree(v) != 3) return false;
    return bridges(map).empty();
}

} // namespace isobar
