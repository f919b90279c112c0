#include "isobar/planar_map.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "lines.hpp"

namespace isobar {

std::vector<int> Face::vertices() const {
    std::vector<int> out;
    out.reserve(boundary.size());
    for (const Dart& d : boundary) out.push_back(d.first);
    return out;
}

bool Face::contains_vertex(int v) const {
    for (const Dart& d : boundary)
        if (d.first == v) return true;
    return false;
}

PlanarMap::PlanarMap(std::vector<std::vector<int>> rotations,
                     std::optional<Dart> outer_dart)
    : rotations_(std::move(rotations)) {
    const int n = vertex_count();
    if (n == 0) throw ValidationError("map has no vertices");

    nbr_index_.resize(n);
    long long degree_sum = 0;
    for (int u = 0; u < n; ++u) {
        const auto& rot = rotations_[u];
        if (rot.size() < 2)
            throw ValidationError("vertex " + std::to_string(u) + " has degree " +
                                  std::to_string(rot.size()) + " (minimum is 2)");
        for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
            const int v = rot[i];
            if (v < 0 || v >= n)
                throw ValidationError("vertex " + std::to_string(u) +
                                      " lists out-of-range neighbor " + std::to_string(v));
            if (v == u)
                throw ValidationError("self-loop at vertex " + std::to_string(u));
            if (!nbr_index_[u].emplace(v, i).second)
                throw ValidationError("repeated neighbor " + std::to_string(v) +
                                      " at vertex " + std::to_string(u));
        }
        degree_sum += static_cast<long long>(rot.size());
    }
    for (int u = 0; u < n; ++u)
        for (int v : rotations_[u])
            if (!nbr_index_[v].count(u))
                throw ValidationError("asymmetric adjacency between " + std::to_string(u) +
                                      " and " + std::to_string(v));
    edge_count_ = static_cast<int>(degree_sum / 2);

    // Connectivity.
    std::vector<char> seen(n, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v : rotations_[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                queue.push_back(v);
            }
    }
    if (reached != n) throw ValidationError("graph is disconnected");

    extract_faces();

    if (vertex_count() - edge_count_ + face_count() != 2)
        throw ValidationError("Euler violation: V - E + F = " +
                              std::to_string(vertex_count() - edge_count_ + face_count()) +
                              " (rotation system is not planar)");

    for (int u = 0; u < n; ++u)
        for (int v : rotations_[u])
            if (u < v) edges_.emplace_back(u, v);
    std::sort(edges_.begin(), edges_.end());

    if (outer_dart) {
        const auto [u, v] = *outer_dart;
        if (u < 0 || u >= n || !nbr_index_[u].count(v))
            throw ValidationError("outer dart (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ") is not an edge");
        outer_face_ = face_left_of(*outer_dart);
    }
}

void PlanarMap::extract_faces() {
    const int n = vertex_count();
    dart_face_.resize(n);
    for (int u = 0; u < n; ++u) dart_face_[u].assign(rotations_[u].size(), -1);

    // Walking darts in lexicographic order discovers every face at its
    // minimal dart, so face ids ascend by minimal dart automatically.
    for (int u = 0; u < n; ++u) {
        std::vector<int> nbrs = rotations_[u];
        std::sort(nbrs.begin(), nbrs.end());
        for (int v : nbrs) {
            if (dart_face_[u][nbr_index_[u].at(v)] != -1) continue;
            Face face;
            face.id = face_count();
            Dart d{u, v};
            do {
                dart_face_[d.first][nbr_index_[d.first].at(d.second)] = face.id;
                face.boundary.push_back(d);
                d = face_successor(d);
            } while (d != Dart{u, v});
            faces_.push_back(std::move(face));
        }
    }
}

Dart PlanarMap::face_successor(Dart d) const {
    const auto& rot = rotations_[d.second];
    const int i = nbr_index_[d.second].at(d.first);
    return {d.second, rot[(i + 1) % rot.size()]};
}

bool PlanarMap::adjacent(int u, int v) const {
    return u >= 0 && u < vertex_count() && nbr_index_[u].count(v) != 0;
}

int PlanarMap::face_left_of(Dart d) const {
    return dart_face_.at(d.first).at(nbr_index_.at(d.first).at(d.second));
}

std::pair<int, int> PlanarMap::faces_of_edge(Edge e) const {
    return {face_left_of({e.first, e.second}), face_left_of({e.second, e.first})};
}

PlanarMap parse_map(const std::string& text) {
    using detail::parse_int;
    detail::LineReader reader(text);

    const auto& header = reader.take("header 'planarmap 1'");
    if (header.size() != 2 || header[0] != "planarmap" || header[1] != "1")
        throw ParseError("expected header 'planarmap 1'");

    const auto& vline = reader.take("line 'V <n>'");
    if (vline.size() != 2 || vline[0] != "V")
        throw ParseError("expected line 'V <n>'");
    const int n = parse_int(vline[1], "vertex count");
    if (n <= 0) throw ParseError("vertex count must be positive");

    std::vector<std::vector<int>> rotations(n);
    std::vector<char> defined(n, 0);
    for (int i = 0; i < n; ++i) {
        const auto& line = reader.take("vertex line '<id>: <k> <neighbors>'");
        if (line.size() < 2 || line[0].empty() || line[0].back() != ':')
            throw ParseError("expected vertex line '<id>: <k> <neighbors>'");
        const int id = parse_int(line[0].substr(0, line[0].size() - 1), "vertex id");
        if (id < 0 || id >= n) throw ParseError("vertex id " + std::to_string(id) + " out of range");
        if (defined[id]) throw ParseError("vertex " + std::to_string(id) + " defined twice");
        defined[id] = 1;
        const int k = parse_int(line[1], "neighbor count");
        if (k < 0 || static_cast<int>(line.size()) != 2 + k)
            throw ParseError("vertex " + std::to_string(id) + " declares " + std::to_string(k) +
                             " neighbors but lists " + std::to_string(line.size() - 2));
        for (int j = 0; j < k; ++j)
            rotations[id].push_back(parse_int(line[2 + j], "neighbor id"));
    }

    std::optional<Dart> outer;
    if (!reader.done()) {
        const auto& line = reader.take("outer line");
        if (line.size() != 3 || line[0] != "outer:")
            throw ParseError("expected 'outer: <u> <v>' or end of input");
        outer = Dart{parse_int(line[1], "outer dart origin"), parse_int(line[2], "outer dart target")};
    }
    if (!reader.done()) throw ParseError("trailing input after map definition");

    return PlanarMap(std::move(rotations), outer);
}

std::string serialize_map(const PlanarMap& map) {
    std::ostringstream out;
    out << "planarmap 1\n";
    out << "V " << map.vertex_count() << "\n";
    for (int u = 0; u < map.vertex_count(); ++u) {
        out << u << ": " << map.degree(u);
        for (int v : map.rotation(u)) out << " " << v;
        out << "\n";
    }
    const Dart anchor = map.face(map.outer_face()).boundary.front();
    out << "outer: " << anchor.first << " " << anchor.second << "\n";
    return out.str();
}

PlanarMap dual(const PlanarMap& map) {
    std::vector<std::vector<int>> rotations(map.face_count());
    for (const Face& face : map.faces()) {
        auto& rot = rotations[face.id];
        rot.reserve(face.boundary.size());
        for (const Dart& d : face.boundary) {
            const int other = map.face_left_of(reverse(d));
            if (other == face.id)
                throw ValidationError("dual has a self-loop: face " + std::to_string(face.id) +
                                      " lies on both sides of an edge");
            rot.push_back(other);
        }
        std::vector<int> sorted = rot;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ValidationError("dual has a multiedge: faces " + std::to_string(face.id) +
                                  " and " + std::to_string(*std::adjacent_find(sorted.begin(), sorted.end())) +
                                  " share more than one edge");
    }
    return PlanarMap(std::move(rotations));
}

PlanarMap map_from_faces(int vertex_count, const std::vector<std::vector<int>>& faces,
                         std::optional<Dart> outer_dart) {
    const int f = static_cast<int>(faces.size());
    if (f < 2) throw ValidationError("a closed face cover needs at least 2 faces");

    // Incidences of each undirected edge: (face, position); every edge must
    // be covered exactly twice.
    std::map<Edge, std::vector<std::pair<int, int>>> edge_uses;
    for (int i = 0; i < f; ++i) {
        const auto& cycle = faces[i];
        if (cycle.size() < 3)
            throw ValidationError("face " + std::to_string(i) + " has fewer than 3 vertices");
        for (int j = 0; j < static_cast<int>(cycle.size()); ++j) {
            const int u = cycle[j];
            const int v = cycle[(j + 1) % cycle.size()];
            if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
                throw ValidationError("face " + std::to_string(i) + " uses an out-of-range vertex");
            if (u == v) throw ValidationError("face " + std::to_string(i) + " repeats a vertex consecutively");
            edge_uses[edge_of(u, v)].push_back({i, j});
        }
    }
    for (const auto& [e, uses] : edge_uses)
        if (uses.size() != 2)
            throw ValidationError("edge (" + std::to_string(e.first) + ", " + std::to_string(e.second) +
                                  ") is covered " + std::to_string(uses.size()) + " times, expected 2");

    // Orient all faces consistently: across every shared edge the two
    // traversal directions must be opposite.  BFS over the face adjacency,
    // flipping whole faces as needed.
    auto dart_at = [&](int face, int pos, bool flip) -> Dart {
        const auto& cycle = faces[face];
        const int m = static_cast<int>(cycle.size());
        Dart d{cycle[pos], cycle[(pos + 1) % m]};
        return flip ? reverse(d) : d;
    };
    std::vector<int> flip(f, -1); // -1 unvisited, else 0/1
    for (int start = 0; start < f; ++start) {
        if (flip[start] != -1) continue;
        flip[start] = 0;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            const int i = queue.front();
            queue.pop_front();
            for (int j = 0; j < static_cast<int>(faces[i].size()); ++j) {
                const Dart d = dart_at(i, j, flip[i]);
                for (const auto& [other, pos] : edge_uses[edge_of(d.first, d.second)]) {
                    if (other == i && pos == j) continue;
                    if (other == i) {
                        // One face traversing the edge twice must do so in
                        // both directions; flipping preserves that.
                        if (dart_at(i, pos, false) == dart_at(i, j, false))
                            throw ValidationError("face " + std::to_string(i) +
                                                  " traverses an edge twice in the same direction");
                        continue;
                    }
                    const int need = dart_at(other, pos, false) == d ? 1 : 0;
                    if (flip[other] == -1) {
                        flip[other] = need;
                        queue.push_back(other);
                    } else if (flip[other] != need) {
                        throw ValidationError("faces cannot be oriented consistently");
                    }
                }
            }
        }
    }

    // Stitch rotations: a face corner (a, v, b) dictates that b follows a in
    // the rotation at v; the pairs at each vertex must close one cycle.
    std::vector<std::map<int, int>> succ(vertex_count);
    for (int i = 0; i < f; ++i) {
        const auto& cycle = faces[i];
        const int m = static_cast<int>(cycle.size());
        for (int j = 0; j < m; ++j) {
            Dart in = dart_at(i, (j + m - 1) % m, flip[i]);
            Dart out = dart_at(i, j, flip[i]);
            if (flip[i]) std::swap(in, out); // flipped faces run corners backwards
            const int v = out.first;
            if (!succ[v].emplace(in.first, out.second).second)
                throw ValidationError("conflicting corners around vertex " + std::to_string(v));
        }
    }
    std::vector<std::vector<int>> rotations(vertex_count);
    for (int v = 0; v < vertex_count; ++v) {
        if (succ[v].empty())
            throw ValidationError("vertex " + std::to_string(v) + " appears in no face");
        auto& rot = rotations[v];
        const int first = succ[v].begin()->first;
        int cur = first;
        do {
            rot.push_back(cur);
            auto it = succ[v].find(cur);
            if (it == succ[v].end())
                throw ValidationError("corners around vertex " + std::to_string(v) +
                                      " do not close a cycle");
            cur = it->second;
        } while (cur != first && static_cast<int>(rot.size()) <= static_cast<int>(succ[v].size()));
        if (cur != first || rot.size() != succ[v].size())
            throw ValidationError("corners around vertex " + std::to_string(v) +
                                  " do not close a single cycle");
    }

    return PlanarMap(std::move(rotations), outer_dart);
}

} // namespace isobar
