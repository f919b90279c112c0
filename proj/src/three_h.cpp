#include "isobar/three_h.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "isobar/grinberg.hpp"

namespace isobar {

namespace {

// Backtracking search for a proper 3-edge-coloring whose three two-color
// unions are all single spanning cycles.  Colors at vertex 0 are pinned to
// the rotation order, which fixes the six renamings of any solution.
//
// For each excluded color k the union of the other two classes is tracked
// as a set of paths via partner endpoints, exactly like a cycle search:
// joining two ends of the same path is allowed only when it spends the
// pair's full n edges, so any surviving complete coloring has all three
// unions Hamiltonian by construction.
class ColoringSearch {
  public:
    ColoringSearch(const PlanarMap& map, std::uint64_t budget)
        : map_(map),
          budget_(budget),
          n_(map.vertex_count()),
          m_(map.edge_count()),
          edges_(map.edges()),
          color_(m_, -1),
          colored_at_(n_, 0),
          used_(static_cast<std::size_t>(n_) * 3, 0) {
        for (auto& partner : partner_) {
            partner.resize(n_);
            for (int v = 0; v < n_; ++v) partner[v] = v;
        }
    }

    std::optional<std::vector<int>> run() {
        // Pin the three edges at vertex 0.
        const auto& rotation = map_.rotation(0);
        for (int c = 0; c < 3; ++c) {
            const int e = edge_index(edge_of(0, rotation[c]));
            if (!feasible(e, c)) return std::nullopt;
            assign(e, c);
        }
        if (dfs()) return color_;
        return std::nullopt;
    }

  private:
    char& used(int v, int c) { return used_[static_cast<std::size_t>(v) * 3 + c]; }

    int edge_index(Edge e) const {
        return static_cast<int>(
            std::lower_bound(edges_.begin(), edges_.end(), e) - edges_.begin());
    }

    bool feasible(int e, int c) {
        const auto [u, v] = edges_[e];
        if (used(u, c) || used(v, c)) return false;
        for (int k = 0; k < 3; ++k) {
            if (k == c) continue;
            if (partner_[k][u] == v && pair_edges_[k] + 1 < n_) return false;
        }
        return true;
    }

    struct Step {
        int edge;
        int color;
        std::array<std::array<int, 2>, 2> spliced; // per affected pair: ends or {-1,-1}
    };

    void assign(int e, int c) {
        const auto [u, v] = edges_[e];
        color_[e] = c;
        used(u, c) = used(v, c) = 1;
        ++colored_at_[u];
        ++colored_at_[v];
        Step step{e, c, {{{-1, -1}, {-1, -1}}}};
        int slot = 0;
        for (int k = 0; k < 3; ++k) {
            if (k == c) continue;
            auto& partner = partner_[k];
            ++pair_edges_[k];
            if (partner[u] != v) { // joining two distinct paths
                const int pu = partner[u], pv = partner[v];
                partner[pu] = pv;
                partner[pv] = pu;
                step.spliced[slot] = {pu, pv};
            }
            ++slot;
        }
        trail_.push_back(step);
    }

    void undo() {
        const Step step = trail_.back();
        trail_.pop_back();
        const auto [u, v] = edges_[step.edge];
        int slot = 0;
        for (int k = 0; k < 3; ++k) {
            if (k == step.color) continue;
            --pair_edges_[k];
            const auto [pu, pv] = step.spliced[slot++];
            if (pu != -1) {
                partner_[k][pu] = u;
                partner_[k][pv] = v;
            }
        }
        color_[step.edge] = -1;
        used(u, step.color) = used(v, step.color) = 0;
        --colored_at_[u];
        --colored_at_[v];
    }

    // Most-constrained uncolored edge: prefer one at a vertex with two
    // colored edges (its color is forced), otherwise maximize the colored
    // degree across both endpoints; ties go to the smallest edge index.
    int pick_edge() const {
        int best = -1, best_score = -1;
        for (int e = 0; e < m_; ++e) {
            if (color_[e] != -1) continue;
            const auto [u, v] = edges_[e];
            if (colored_at_[u] == 2 || colored_at_[v] == 2) return e;
            const int score = colored_at_[u] + colored_at_[v];
            if (score > best_score) {
                best = e;
                best_score = score;
            }
        }
        return best;
    }

    bool dfs() {
        if (++expansions_ > budget_)
            throw BudgetError("edge-coloring search exceeded " + std::to_string(budget_) +
                              " expansions");
        const int e = pick_edge();
        if (e == -1) return true;
        for (int c = 0; c < 3; ++c) {
            if (!feasible(e, c)) continue;
            assign(e, c);
            if (dfs()) return true;
            undo();
        }
        return false;
    }

    const PlanarMap& map_;
    std::uint64_t budget_;
    std::uint64_t expansions_ = 0;
    int n_, m_;
    std::vector<Edge> edges_;
    std::vector<int> color_;
    std::vector<int> colored_at_;
    std::vector<char> used_;
    std::array<std::vector<int>, 3> partner_;
    std::array<int, 3> pair_edges_{};
    std::vector<Step> trail_;
};

// Walk the union of the two color classes other than k as a vertex cycle.
std::vector<int> pair_union_order(const PlanarMap& map, const std::vector<Edge>& edges,
                                  const std::vector<int>& color, int k) {
    const int n = map.vertex_count();
    std::vector<std::vector<int>> next(n);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (color[e] == k) continue;
        next[edges[e].first].push_back(edges[e].second);
        next[edges[e].second].push_back(edges[e].first);
    }
    std::vector<int> order{0};
    int prev = -1, at = 0;
    for (int i = 1; i < n; ++i) {
        const int to = next[at][0] == prev ? next[at][1] : next[at][0];
        order.push_back(to);
        prev = at;
        at = to;
    }
    return order;
}

} // namespace

std::optional<ThreeHFactorization> find_3h_factorization(const PlanarMap& map,
                                                         std::uint64_t budget) {
    for (int v = 0; v < map.vertex_count(); ++v)
        if (map.degree(v) != 3)
            throw ValidationError("3H factorizations are defined for cubic maps only");

    // A certificate of non-Hamiltonicity rules out every two-color union at
    // once; skip the coloring search entirely.
    if (certificate_case_a(map) || certificate_case_b(map)) return std::nullopt;

    ColoringSearch search(map, budget);
    const auto colors = search.run();
    if (!colors) return std::nullopt;

    ThreeHFactorization fact;
    const std::vector<Edge>& edges = map.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) fact.edge_colors[edges[e]] = (*colors)[e];
    for (int k = 0; k < 3; ++k)
        fact.cycles.emplace_back(map, pair_union_order(map, edges, *colors, k));
    fact.face_colors = face_nesting_colors(map, fact.cycles);
    const std::vector<int> weights = face_weights(map);
    for (int f = 0; f < map.face_count(); ++f) fact.sigma[fact.face_colors[f]] += weights[f];
    return fact;
}

std::vector<int> face_nesting_colors(const PlanarMap& map,
                                     const std::vector<HamiltonianCycle>& cycles) {
    if (cycles.size() != 3) throw ValidationError("expected exactly three cycles");
    for (const HamiltonianCycle& cycle : cycles)
        if (!is_hamiltonian_cycle(map, cycle.order()))
            throw ValidationError("input cycle is not a Hamiltonian cycle of the map");

    // inside[f] = set of cycles holding f strictly inside, as a 3-bit mask.
    std::vector<int> inside(map.face_count(), 0);
    for (int k = 0; k < 3; ++k)
        for (int f : cycle_side_faces(map, cycles[k]).first) inside[f] |= 1 << k;

    // Crossing any edge flips the side for exactly the two cycles that use
    // it, so relative to the outer face every face sits inside an even
    // number of cycles: none, or all but one.
    std::vector<int> colors(map.face_count());
    for (int f = 0; f < map.face_count(); ++f) {
        switch (inside[f]) {
            case 0b000: colors[f] = 0; break;
            case 0b110: colors[f] = 1; break; // outside cycle 0 only
            case 0b101: colors[f] = 2; break;
            case 0b011: colors[f] = 3; break;
            default:
                throw ValidationError(
                    "face " + std::to_string(f) +
                    " is inside an odd number of cycles; the cycles do not share matchings");
        }
    }
    return colors;
}

int edge_color_from_face_colors(int i, int j) {
    if (i < 0 || i > 3 || j < 0 || j > 3)
        throw ValidationError("face colors must lie in 0..3");
    if (i == j) throw ValidationError("adjacent faces share a color; the coloring is not proper");
    return std::abs(i + j - 3);
}

bool verify_corollary(const PlanarMap& map, const ThreeHFactorization& fact) {
    if (fact.cycles.size() != 3) return false;
    for (const HamiltonianCycle& cycle : fact.cycles)
        if (!is_hamiltonian_cycle(map, cycle.order())) return false;

    std::vector<int> colors;
    try {
        colors = face_nesting_colors(map, fact.cycles);
    } catch (const ValidationError&) {
        return false;
    }
    if (fact.face_colors != colors) return false;

    const std::vector<int> weights = face_weights(map);
    std::array<int, 4> sigma{};
    for (int f = 0; f < map.face_count(); ++f) sigma[colors[f]] += weights[f];
    if (sigma != fact.sigma) return false;

    // Each cycle's two-side weight balance, expressed in the sigmas: the
    // faces inside cycle k are exactly those of the two colors other than
    // 0 and k+1, and both sides must sum to n - 2.
    const int half = map.vertex_count() - 2;
    for (int k = 0; k < 3; ++k) {
        if (!verify_grinberg_identity(map, fact.cycles[k]).holds) return false;
        int in = 0, out = sigma[0] + sigma[k + 1];
        for (int c = 1; c <= 3; ++c)
            if (c != k + 1) in += sigma[c];
        if (in != half || out != half) return false;
    }
    if (sigma[0] != sigma[1] || sigma[0] != sigma[2] || sigma[0] != sigma[3]) return false;

    // The face colors must reproduce the edge coloring through the
    // |i + j - 3| rule, up to one of the six renamings of {0, 1, 2}.
    std::array<int, 3> perm{0, 1, 2};
    std::sort(perm.begin(), perm.end());
    do {
        bool match = true;
        for (const Edge& e : map.edges()) {
            const auto [f1, f2] = map.faces_of_edge(e);
            if (colors[f1] == colors[f2]) return false; // improper face coloring
            const int induced = edge_color_from_face_colors(colors[f1], colors[f2]);
            const auto it = fact.edge_colors.find(e);
            if (it == fact.edge_colors.end() || it->second < 0 || it->second > 2 ||
                perm[it->second] != induced) {
                match = false;
                break;
            }
        }
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace isobar
