#include "isobar/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace isobar {

namespace {

// Edge-state backtracking: every edge is undecided, required, or excluded.
// Constraint propagation keeps each vertex with exactly two non-excluded
// edges once decisions force it, and the partner array tracks endpoints of
// required paths so a cycle can only close when it spans all n vertices.
// The search explores require-first, then exclude, branching at an endpoint
// of a required path with the fewest undecided edges (fail-first), so the
// whole run is deterministic.
class Search {
  public:
    enum class Flow { proceed, stop_found, stop_budget };

    Search(const PlanarMap& map, std::uint64_t budget, bool enumerate_all)
        : map_(map), n_(map.vertex_count()), budget_(budget),
          enumerate_all_(enumerate_all), edges_(map.edges()) {
        inc_.resize(n_);
        for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
            inc_[edges_[e].first].push_back({edges_[e].second, e});
            inc_[edges_[e].second].push_back({edges_[e].first, e});
        }
        for (auto& list : inc_) std::sort(list.begin(), list.end());
        state_.assign(edges_.size(), kUndecided);
        req_cnt_.assign(n_, 0);
        alive_cnt_.resize(n_);
        for (int v = 0; v < n_; ++v) alive_cnt_[v] = map.degree(v);
        partner_.resize(n_);
        std::iota(partner_.begin(), partner_.end(), 0);
    }

    Flow run() { return dfs(); }

    std::uint64_t expansions() const { return expansions_; }
    std::vector<HamiltonianCycle>& found() { return found_; }

  private:
    static constexpr std::int8_t kUndecided = 0;
    static constexpr std::int8_t kRequired = 1;
    static constexpr std::int8_t kExcluded = 2;

    struct Undo {
        std::vector<int> req, exc;
        std::vector<std::pair<int, int>> partner_old;
    };

    bool require_edge(int e, Undo& undo, std::vector<int>& work) {
        if (state_[e] == kRequired) return true;
        if (state_[e] == kExcluded) return false;
        state_[e] = kRequired;
        undo.req.push_back(e);
        ++req_edges_;
        const auto [u, v] = edges_[e];
        ++req_cnt_[u];
        ++req_cnt_[v];
        if (req_cnt_[u] > 2 || req_cnt_[v] > 2) return false;
        if (partner_[u] == v) {
            // e joins the two endpoints of one required path: a cycle, legal
            // only when it is the full Hamiltonian closure.
            if (req_edges_ != n_) return false;
        } else {
            const int a = partner_[u];
            const int b = partner_[v];
            undo.partner_old.push_back({a, partner_[a]});
            undo.partner_old.push_back({b, partner_[b]});
            partner_[a] = b;
            partner_[b] = a;
        }
        work.push_back(u);
        work.push_back(v);
        return true;
    }

    bool exclude_edge(int e, Undo& undo, std::vector<int>& work) {
        if (state_[e] == kExcluded) return true;
        if (state_[e] == kRequired) return false;
        state_[e] = kExcluded;
        undo.exc.push_back(e);
        const auto [u, v] = edges_[e];
        --alive_cnt_[u];
        --alive_cnt_[v];
        work.push_back(u);
        work.push_back(v);
        return true;
    }

    bool propagate(Undo& undo, std::vector<int>& work) {
        while (!work.empty()) {
            const int v = work.back();
            work.pop_back();
            if (alive_cnt_[v] < 2 || req_cnt_[v] > 2) return false;
            if (req_cnt_[v] == 2) {
                for (const auto& [w, e] : inc_[v])
                    if (state_[e] == kUndecided && !exclude_edge(e, undo, work)) return false;
            } else if (alive_cnt_[v] == 2) {
                for (const auto& [w, e] : inc_[v])
                    if (state_[e] == kUndecided && !require_edge(e, undo, work)) return false;
            }
        }
        return true;
    }

    void undo_level(const Undo& undo) {
        for (auto it = undo.partner_old.rbegin(); it != undo.partner_old.rend(); ++it)
            partner_[it->first] = it->second;
        for (int e : undo.req) {
            state_[e] = kUndecided;
            --req_edges_;
            --req_cnt_[edges_[e].first];
            --req_cnt_[edges_[e].second];
        }
        for (int e : undo.exc) {
            state_[e] = kUndecided;
            ++alive_cnt_[edges_[e].first];
            ++alive_cnt_[edges_[e].second];
        }
    }

    int pick_vertex() const {
        int best = -1;
        bool best_endpoint = false;
        int best_undecided = 0;
        for (int v = 0; v < n_; ++v) {
            const int undecided = alive_cnt_[v] - req_cnt_[v];
            if (undecided <= 0) continue;
            const bool endpoint = req_cnt_[v] == 1;
            if (best == -1 || (endpoint && !best_endpoint) ||
                (endpoint == best_endpoint && undecided < best_undecided)) {
                best = v;
                best_endpoint = endpoint;
                best_undecided = undecided;
            }
        }
        return best;
    }

    void emit() {
        std::vector<std::array<int, 2>> next(n_, {-1, -1});
        for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
            if (state_[e] != kRequired) continue;
            const auto [u, v] = edges_[e];
            next[u][next[u][0] == -1 ? 0 : 1] = v;
            next[v][next[v][0] == -1 ? 0 : 1] = u;
        }
        std::vector<int> order;
        order.reserve(n_);
        int prev = -1;
        int cur = 0;
        do {
            order.push_back(cur);
            const int nxt = next[cur][0] != prev ? next[cur][0] : next[cur][1];
            prev = cur;
            cur = nxt;
        } while (cur != 0);
        found_.emplace_back(map_, std::move(order));
    }

    Flow dfs() {
        if (req_edges_ == n_) {
            emit();
            return enumerate_all_ ? Flow::proceed : Flow::stop_found;
        }
        if (expansions_ >= budget_) return Flow::stop_budget;
        ++expansions_;

        const int v = pick_vertex();
        if (v < 0) return Flow::proceed; // fully decided without a cycle
        int e = -1;
        for (const auto& [w, id] : inc_[v])
            if (state_[id] == kUndecided) {
                e = id;
                break;
            }

        for (int phase = 0; phase < 2; ++phase) {
            Undo undo;
            std::vector<int> work;
            bool ok = phase == 0 ? require_edge(e, undo, work) : exclude_edge(e, undo, work);
            if (ok) ok = propagate(undo, work);
            if (ok) {
                const Flow flow = dfs();
                if (flow != Flow::proceed) {
                    undo_level(undo);
                    return flow;
                }
            }
            undo_level(undo);
        }
        return Flow::proceed;
    }

    const PlanarMap& map_;
    const int n_;
    const std::uint64_t budget_;
    const bool enumerate_all_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> inc_; // v -> (neighbor, edge id)
    std::vector<std::int8_t> state_;
    std::vector<int> req_cnt_, alive_cnt_, partner_;
    int req_edges_ = 0;
    std::uint64_t expansions_ = 0;
    std::vector<HamiltonianCycle> found_;
};

} // namespace

SearchResult find_hamiltonian_cycle(const PlanarMap& map, std::uint64_t budget) {
    Search search(map, budget, false);
    const Search::Flow flow = search.run();
    SearchResult result{SearchResult::Status::none, std::nullopt, search.expansions()};
    if (flow == Search::Flow::stop_budget) {
        result.status = SearchResult::Status::budget_exhausted;
    } else if (!search.found().empty()) {
        result.status = SearchResult::Status::found;
        result.cycle = std::move(search.found().front());
    }
    return result;
}

std::optional<bool> is_hamiltonian(const PlanarMap& map, std::uint64_t budget) {
    const SearchResult result = find_hamiltonian_cycle(map, budget);
    if (result.status == SearchResult::Status::budget_exhausted) return std::nullopt;
    return result.status == SearchResult::Status::found;
}

EnumerationResult enumerate_hamiltonian_cycles(const PlanarMap& map, int limit,
                                               std::uint64_t budget) {
    Search search(map, budget, true);
    const Search::Flow flow = search.run();
    auto& cycles = search.found();
    std::sort(cycles.begin(), cycles.end());
    cycles.erase(std::unique(cycles.begin(), cycles.end()), cycles.end());
    if (limit >= 0 && static_cast<int>(cycles.size()) > limit)
        cycles.erase(cycles.begin() + limit, cycles.end());

    EnumerationResult result{SearchResult::Status::none, std::move(cycles), search.expansions()};
    if (flow == Search::Flow::stop_budget)
        result.status = SearchResult::Status::budget_exhausted;
    else if (!result.cycles.empty())
        result.status = SearchResult::Status::found;
    return result;
}

} // namespace isobar
