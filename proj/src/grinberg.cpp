#include "isobar/grinberg.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "lines.hpp"

namespace isobar {

int face_weight(const Face& face) { return face.length() - 2; }

std::vector<int> face_weights(const PlanarMap& map) {
    std::vector<int> weights;
    weights.reserve(map.face_count());
    for (const Face& face : map.faces()) weights.push_back(face_weight(face));
    return weights;
}

WeightSummary weight_summary(const std::vector<Face>& faces) {
    WeightSummary summary;
    summary.nu = static_cast<int>(faces.size());
    for (const Face& face : faces) summary.sigma_total += face.length();
    summary.s = summary.sigma_total - 2 * summary.nu;
    return summary;
}

GrinbergIdentity verify_grinberg_identity(const PlanarMap& map,
                                          const HamiltonianCycle& cycle) {
    const auto [inner, outer] = cycle_side_faces(map, cycle);
    const std::vector<int> weights = face_weights(map);
    GrinbergIdentity identity;
    for (int f : inner) identity.s1 += weights[f];
    for (int f : outer) identity.s2 += weights[f];
    identity.holds =
        identity.s1 == identity.s2 && identity.s1 == cycle.length() - 2;
    return identity;
}

std::pair<std::vector<Edge>, std::vector<Edge>>
classify_chords(const PlanarMap& map, const HamiltonianCycle& cycle) {
    const DualCut cut = dual_cut_of_cycle(map, cycle);
    return {cut.side_chords[0], cut.side_chords[1]};
}

namespace {

void validate_partition(const PlanarMap& map, const IsobaricPartition& partition) {
    if (partition.side_a.empty() || partition.side_b.empty())
        throw ValidationError("both sides of a partition must be nonempty");
    std::vector<char> seen(map.face_count(), 0);
    for (const auto* side : {&partition.side_a, &partition.side_b})
        for (int f : *side) {
            if (f < 0 || f >= map.face_count())
                throw ValidationError("partition names unknown face " + std::to_string(f));
            if (seen[f]++)
                throw ValidationError("face " + std::to_string(f) +
                                      " appears twice in the partition");
        }
    for (int f = 0; f < map.face_count(); ++f)
        if (!seen[f])
            throw ValidationError("partition misses face " + std::to_string(f));
}

// side_of[f] = 0 for side_a, 1 for side_b.
std::vector<int> partition_sides(const PlanarMap& map, const IsobaricPartition& partition) {
    validate_partition(map, partition);
    std::vector<int> side_of(map.face_count(), 1);
    for (int f : partition.side_a) side_of[f] = 0;
    return side_of;
}

} // namespace

std::vector<IsobaricPartition> isobaric_partitions(const PlanarMap& map,
                                                   std::optional<int> limit,
                                                   int face_ceiling) {
    const int f = map.face_count();
    if (f > face_ceiling && !limit)
        throw BudgetError("map has " + std::to_string(f) + " faces, above the exhaustive ceiling of " +
                          std::to_string(face_ceiling) + "; raise the ceiling or pass a limit");

    const std::vector<int> weights = face_weights(map);
    const int total = std::accumulate(weights.begin(), weights.end(), 0);
    std::vector<IsobaricPartition> out;
    if (total % 2 != 0) return out;
    const int target = total / 2;

    // reachable[i][t]: faces i..f-1 hold a subset of weight t.
    std::vector<std::vector<char>> reachable(f + 1, std::vector<char>(target + 1, 0));
    reachable[f][0] = 1;
    for (int i = f - 1; i >= 0; --i)
        for (int t = 0; t <= target; ++t)
            reachable[i][t] =
                reachable[i + 1][t] || (t >= weights[i] && reachable[i + 1][t - weights[i]]);

    // Grow side_a (which always holds face 0) in ascending face order and
    // emit each time the target weight is hit: that is exactly lexicographic
    // order on side_a.  Weights are positive, so side_b can never end up
    // empty (that would need target = total).
    std::vector<int> side_a{0};
    const auto emit = [&] {
        IsobaricPartition partition;
        partition.side_a = side_a;
        std::vector<char> in_a(f, 0);
        for (int id : side_a) in_a[id] = 1;
        for (int id = 0; id < f; ++id)
            if (!in_a[id]) partition.side_b.push_back(id);
        out.push_back(std::move(partition));
    };
    const auto dfs = [&](auto&& self, int next, int sum) -> bool {
        if (sum == target) {
            emit();
            if (limit && static_cast<int>(out.size()) >= *limit) return false;
        }
        for (int j = next; j < f; ++j) {
            const int rest = target - sum - weights[j];
            if (rest < 0 || !reachable[j + 1][rest]) continue;
            side_a.push_back(j);
            const bool keep_going = self(self, j + 1, sum + weights[j]);
            side_a.pop_back();
            if (!keep_going) return false;
        }
        return true;
    };
    if (weights[0] <= target && reachable[1][target - weights[0]])
        dfs(dfs, 1, weights[0]);
    return out;
}

std::vector<Edge> partition_border(const PlanarMap& map,
                                   const IsobaricPartition& partition) {
    const std::vector<int> side_of = partition_sides(map, partition);
    std::vector<Edge> border;
    for (const Edge& e : map.edges()) {
        const auto [f1, f2] = map.faces_of_edge(e);
        if (side_of[f1] != side_of[f2]) border.push_back(e);
    }
    return border;
}

std::optional<PartitionObstruction>
partition_obstruction(const PlanarMap& map, const IsobaricPartition& partition) {
    const std::vector<Edge> border = partition_border(map, partition);
    const int n = map.vertex_count();
    std::vector<int> degree(n, 0);
    for (const Edge& e : border) {
        ++degree[e.first];
        ++degree[e.second];
    }
    for (int v = 0; v < n; ++v)
        if (degree[v] == 0)
            return PartitionObstruction{PartitionObstruction::Reason::misses_vertex, v};
    for (int v = 0; v < n; ++v)
        if (degree[v] != 2)
            return PartitionObstruction{PartitionObstruction::Reason::not_two_regular, v};
    // 2-regular and spanning: a Hamiltonian cycle iff one component.
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : border) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
    }
    if (reached != n)
        return PartitionObstruction{PartitionObstruction::Reason::disconnected, -1};
    return std::nullopt;
}

std::optional<Certificate> certificate_case_a(const PlanarMap& map) {
    const std::vector<int> weights = face_weights(map);
    int special = -1;
    for (int f = 0; f < map.face_count(); ++f) {
        if (weights[f] % 3 == 0) continue;
        if (special != -1) return std::nullopt;
        special = f;
    }
    if (special == -1) return std::nullopt;
    Certificate cert;
    cert.kind = Certificate::Kind::case_a;
    cert.case_a = {special, weights[special]};
    return cert;
}

namespace {

// The three faces around a degree-3 vertex, ascending, or empty if they are
// not distinct.
std::vector<int> faces_at_degree3_vertex(const PlanarMap& map, int v) {
    std::vector<int> faces;
    for (int u : map.rotation(v)) faces.push_back(map.face_left_of({v, u}));
    std::sort(faces.begin(), faces.end());
    if (std::adjacent_find(faces.begin(), faces.end()) != faces.end()) return {};
    return faces;
}

} // namespace

std::optional<Certificate> certificate_case_b(const PlanarMap& map) {
    const std::vector<int> weights = face_weights(map);
    std::vector<int> special;
    for (int f = 0; f < map.face_count(); ++f)
        if (weights[f] % 3 != 0) special.push_back(f);
    if (special.size() != 3) return std::nullopt;
    const int residue = ((weights[special[0]] % 3) + 3) % 3;
    for (int f : special)
        if (((weights[f] % 3) + 3) % 3 != residue) return std::nullopt;

    // The witness vertex must meet exactly the three special faces, which
    // pins its degree to 3: any balanced split keeps all three on one side,
    // so no border can pass through it.
    for (int v = 0; v < map.vertex_count(); ++v) {
        if (map.degree(v) != 3) continue;
        if (faces_at_degree3_vertex(map, v) != special) continue;
        Certificate cert;
        cert.kind = Certificate::Kind::case_b;
        cert.case_b.vertex = v;
        cert.case_b.face_ids = special;
        for (int f : special) cert.case_b.weights.push_back(weights[f]);
        return cert;
    }
    return std::nullopt;
}

std::optional<Certificate> certify_non_hamiltonian(const PlanarMap& map, int face_ceiling) {
    if (auto cert = certificate_case_a(map)) return cert;
    if (auto cert = certificate_case_b(map)) return cert;

    Certificate cert;
    cert.kind = Certificate::Kind::exhaustive;
    cert.exhaustive.partitions = isobaric_partitions(map, std::nullopt, face_ceiling);
    for (const IsobaricPartition& partition : cert.exhaustive.partitions) {
        const auto obstruction = partition_obstruction(map, partition);
        if (!obstruction) return std::nullopt; // that border is a Hamiltonian cycle
        cert.exhaustive.obstructions.push_back(*obstruction);
    }
    return cert;
}

namespace {

std::optional<std::string> check_case_a(const PlanarMap& map, const CertificateCaseA& cert) {
    const std::vector<int> weights = face_weights(map);
    if (cert.face_id < 0 || cert.face_id >= map.face_count())
        return "case_a names unknown face " + std::to_string(cert.face_id);
    if (weights[cert.face_id] != cert.weight)
        return "face " + std::to_string(cert.face_id) + " has weight " +
               std::to_string(weights[cert.face_id]) + ", not " + std::to_string(cert.weight);
    if (cert.weight % 3 == 0)
        return "the special face weight is a multiple of 3";
    for (int f = 0; f < map.face_count(); ++f)
        if (f != cert.face_id && weights[f] % 3 != 0)
            return "face " + std::to_string(f) + " also has weight not divisible by 3";
    return std::nullopt;
}

std::optional<std::string> check_case_b(const PlanarMap& map, const CertificateCaseB& cert) {
    const std::vector<int> weights = face_weights(map);
    if (cert.face_ids.size() != 3 || cert.weights.size() != 3)
        return "case_b must name exactly three faces";
    std::vector<int> ids = cert.face_ids;
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        return "case_b faces must be distinct";
    for (int i = 0; i < 3; ++i) {
        const int f = cert.face_ids[i];
        if (f < 0 || f >= map.face_count())
            return "case_b names unknown face " + std::to_string(f);
        if (weights[f] != cert.weights[i])
            return "face " + std::to_string(f) + " has weight " + std::to_string(weights[f]) +
                   ", not " + std::to_string(cert.weights[i]);
    }
    const int residue = ((cert.weights[0] % 3) + 3) % 3;
    if (residue == 0) return "the special face weights are multiples of 3";
    for (int w : cert.weights)
        if (((w % 3) + 3) % 3 != residue) return "special face weights differ mod 3";
    for (int f = 0; f < map.face_count(); ++f)
        if (weights[f] % 3 != 0 &&
            std::find(cert.face_ids.begin(), cert.face_ids.end(), f) == cert.face_ids.end())
            return "face " + std::to_string(f) + " also has weight not divisible by 3";
    const int v = cert.vertex;
    if (v < 0 || v >= map.vertex_count())
        return "case_b names unknown vertex " + std::to_string(v);
    if (map.degree(v) != 3)
        return "witness vertex " + std::to_string(v) + " has degree " +
               std::to_string(map.degree(v)) + ", not 3";
    if (faces_at_degree3_vertex(map, v) != ids)
        return "the faces at vertex " + std::to_string(v) + " are not the three special faces";
    return std::nullopt;
}

bool obstruction_claim_holds(const PlanarMap& map, const IsobaricPartition& partition,
                             const PartitionObstruction& claim) {
    const std::vector<Edge> border = partition_border(map, partition);
    std::vector<int> degree(map.vertex_count(), 0);
    for (const Edge& e : border) {
        ++degree[e.first];
        ++degree[e.second];
    }
    switch (claim.reason) {
        case PartitionObstruction::Reason::misses_vertex:
            return claim.vertex >= 0 && claim.vertex < map.vertex_count() &&
                   degree[claim.vertex] == 0;
        case PartitionObstruction::Reason::not_two_regular:
            return claim.vertex >= 0 && claim.vertex < map.vertex_count() &&
                   degree[claim.vertex] != 2;
        case PartitionObstruction::Reason::disconnected: {
            // True when the border splits into more than one component.
            const auto first = partition_obstruction(map, partition);
            return first && first->reason == PartitionObstruction::Reason::disconnected;
        }
    }
    return false;
}

std::optional<std::string> check_exhaustive(const PlanarMap& map,
                                            const CertificateExhaustive& cert) {
    if (cert.partitions.size() != cert.obstructions.size())
        return "each partition needs exactly one obstruction";
    const int f = map.face_count();

    // A certificate line names one side as a face set; the complement is
    // the other side, and whichever holds face 0 plays side_a.  Duplicated
    // ids or a one-sided listing cannot name a partition.
    std::vector<IsobaricPartition> claimed;
    for (const IsobaricPartition& partition : cert.partitions) {
        std::vector<char> in_listed(f, 0);
        for (int id : partition.side_a) {
            if (id < 0 || id >= f) return "partition names unknown face " + std::to_string(id);
            if (in_listed[id]++)
                return "face " + std::to_string(id) + " appears twice in a partition";
        }
        const bool listed_has_zero = f > 0 && in_listed[0];
        IsobaricPartition normalized;
        for (int id = 0; id < f; ++id)
            ((in_listed[id] != 0) == listed_has_zero ? normalized.side_a : normalized.side_b)
                .push_back(id);
        if (normalized.side_a.empty() || normalized.side_b.empty())
            return "a listed partition has an empty side";
        claimed.push_back(std::move(normalized));
    }

    const std::vector<IsobaricPartition> expected =
        isobaric_partitions(map, std::nullopt, std::max(32, f));
    std::set<std::vector<int>> listed;
    for (const IsobaricPartition& partition : claimed)
        if (!listed.insert(partition.side_a).second) return "a partition is listed twice";
    if (listed.size() != expected.size())
        return "certificate lists " + std::to_string(listed.size()) + " partitions, map has " +
               std::to_string(expected.size());
    for (const IsobaricPartition& partition : expected)
        if (!listed.count(partition.side_a)) return "certificate misses an isobaric partition";

    for (std::size_t i = 0; i < claimed.size(); ++i)
        if (!obstruction_claim_holds(map, claimed[i], cert.obstructions[i]))
            return "an obstruction claim does not hold for its partition";
    return std::nullopt;
}

} // namespace

std::optional<std::string> check_certificate_error(const PlanarMap& map,
                                                   const Certificate& certificate) {
    try {
        switch (certificate.kind) {
            case Certificate::Kind::case_a:
                return check_case_a(map, certificate.case_a);
            case Certificate::Kind::case_b:
                return check_case_b(map, certificate.case_b);
            case Certificate::Kind::exhaustive:
                return check_exhaustive(map, certificate.exhaustive);
        }
    } catch (const std::exception& err) {
        return std::string(err.what());
    }
    return "unknown certificate kind";
}

bool check_certificate(const PlanarMap& map, const Certificate& certificate) {
    return !check_certificate_error(map, certificate);
}

namespace {

const char* reason_tag(PartitionObstruction::Reason reason) {
    switch (reason) {
        case PartitionObstruction::Reason::misses_vertex: return "misses_vertex";
        case PartitionObstruction::Reason::not_two_regular: return "not_two_regular";
        case PartitionObstruction::Reason::disconnected: return "disconnected";
    }
    return "?";
}

} // namespace

std::string serialize_certificate(const Certificate& certificate) {
    std::ostringstream out;
    out << "certificate v1\n";
    switch (certificate.kind) {
        case Certificate::Kind::case_a:
            out << "kind case_a\n";
            out << "face " << certificate.case_a.face_id << " weight " << certificate.case_a.weight
                << "\n";
            break;
        case Certificate::Kind::case_b:
            out << "kind case_b\n";
            out << "vertex " << certificate.case_b.vertex << "\n";
            for (std::size_t i = 0; i < certificate.case_b.face_ids.size(); ++i)
                out << "face " << certificate.case_b.face_ids[i] << " weight "
                    << certificate.case_b.weights[i] << "\n";
            break;
        case Certificate::Kind::exhaustive:
            out << "kind exhaustive\n";
            out << "partitions " << certificate.exhaustive.partitions.size() << "\n";
            for (std::size_t i = 0; i < certificate.exhaustive.partitions.size(); ++i) {
                out << "partition";
                for (int f : certificate.exhaustive.partitions[i].side_a) out << " " << f;
                const PartitionObstruction& obstruction = certificate.exhaustive.obstructions[i];
                out << " reason " << reason_tag(obstruction.reason);
                if (obstruction.reason != PartitionObstruction::Reason::disconnected)
                    out << " " << obstruction.vertex;
                out << "\n";
            }
            break;
    }
    return out.str();
}

Certificate parse_certificate(const std::string& text) {
    using detail::parse_int;
    detail::LineReader reader(text);

    const auto& header = reader.take("header 'certificate v1'");
    if (header.size() != 2 || header[0] != "certificate" || header[1] != "v1")
        throw ParseError("expected header 'certificate v1'");
    const auto& kind_line = reader.take("kind line");
    if (kind_line.size() != 2 || kind_line[0] != "kind")
        throw ParseError("expected 'kind case_a|case_b|exhaustive'");

    Certificate cert;
    const auto face_line = [&](const std::vector<std::string>& line) -> std::pair<int, int> {
        if (line.size() != 4 || line[0] != "face" || line[2] != "weight")
            throw ParseError("expected 'face <id> weight <w>'");
        return {parse_int(line[1], "face id"), parse_int(line[3], "weight")};
    };

    if (kind_line[1] == "case_a") {
        cert.kind = Certificate::Kind::case_a;
        const auto [face, weight] = face_line(reader.take("face line"));
        cert.case_a = {face, weight};
    } else if (kind_line[1] == "case_b") {
        cert.kind = Certificate::Kind::case_b;
        const auto& vertex_line = reader.take("vertex line");
        if (vertex_line.size() != 2 || vertex_line[0] != "vertex")
            throw ParseError("expected 'vertex <x>'");
        cert.case_b.vertex = parse_int(vertex_line[1], "vertex id");
        for (int i = 0; i < 3; ++i) {
            const auto [face, weight] = face_line(reader.take("face line"));
            cert.case_b.face_ids.push_back(face);
            cert.case_b.weights.push_back(weight);
        }
    } else if (kind_line[1] == "exhaustive") {
        cert.kind = Certificate::Kind::exhaustive;
        const auto& count_line = reader.take("partitions line");
        if (count_line.size() != 2 || count_line[0] != "partitions")
            throw ParseError("expected 'partitions <n>'");
        const int count = parse_int(count_line[1], "partition count");
        if (count < 0) throw ParseError("partition count must be nonnegative");
        for (int i = 0; i < count; ++i) {
            const auto& line = reader.take("partition line");
            if (line.empty() || line[0] != "partition")
                throw ParseError("expected 'partition <ids> reason <tag>'");
            IsobaricPartition partition;
            std::size_t pos = 1;
            while (pos < line.size() && line[pos] != "reason")
                partition.side_a.push_back(parse_int(line[pos++], "face id"));
            if (pos + 1 >= line.size() || line[pos] != "reason")
                throw ParseError("expected 'reason <tag>' in partition line");
            const std::string& tag = line[pos + 1];
            PartitionObstruction obstruction{PartitionObstruction::Reason::disconnected, -1};
            std::size_t expect = pos + 2;
            if (tag == "misses_vertex" || tag == "not_two_regular") {
                obstruction.reason = tag == "misses_vertex"
                                         ? PartitionObstruction::Reason::misses_vertex
                                         : PartitionObstruction::Reason::not_two_regular;
                if (expect >= line.size())
                    throw ParseError("reason " + tag + " needs a witness vertex");
                obstruction.vertex = parse_int(line[expect++], "witness vertex");
            } else if (tag != "disconnected") {
                throw ParseError("unknown obstruction reason '" + tag + "'");
            }
            if (expect != line.size()) throw ParseError("trailing tokens in partition line");
            cert.exhaustive.partitions.push_back(std::move(partition));
            cert.exhaustive.obstructions.push_back(obstruction);
        }
    } else {
        throw ParseError("unknown certificate kind '" + kind_line[1] + "'");
    }
    if (!reader.done()) throw ParseError("trailing input after certificate");

    // side_b is the complement; it can only be reconstructed by the checker,
    // which knows the map.  Leave it empty here.
    return cert;
}

bool multiset_matches_case_a(const std::map<int, int>& weights) {
    int nonzero = 0;
    for (const auto& [w, count] : weights)
        if (((w % 3) + 3) % 3 != 0) nonzero += count;
    return nonzero == 1;
}

bool multiset_matches_case_b(const std::map<int, int>& weights) {
    int nonzero = 0;
    std::set<int> residues;
    for (const auto& [w, count] : weights) {
        const int r = ((w % 3) + 3) % 3;
        if (r == 0) continue;
        nonzero += count;
        residues.insert(r);
    }
    return nonzero == 3 && residues.size() == 1;
}

bool multiset_admits_balanced_split(const std::map<int, int>& weights) {
    int total = 0;
    for (const auto& [w, count] : weights) total += w * count;
    if (total % 2 != 0) return false;
    const int target = total / 2;
    std::vector<char> reachable(target + 1, 0);
    reachable[0] = 1;
    for (const auto& [w, count] : weights)
        for (int c = 0; c < count; ++c)
            for (int t = target; t >= w; --t)
                if (reachable[t - w]) reachable[t] = 1;
    return reachable[target];
}

ChordReplay chord_restoration_replay(const PlanarMap& map, const HamiltonianCycle& cycle) {
    ChordReplay replay;
    std::tie(replay.inside_chords, replay.outside_chords) = classify_chords(map, cycle);
    const auto [inner_faces, outer_faces] = cycle_side_faces(map, cycle);

    // One side at a time: the side starts as the bare cycle polygon (a
    // single face of length h) and each chord splits the unique current
    // face holding both endpoints.  The weight sum S must sit at h - 2
    // after every insertion, and the final lengths must reproduce the
    // map's own faces on that side.
    const auto run_side = [&](const std::vector<Edge>& chords, const std::vector<int>& real_faces,
                              std::vector<WeightSummary>& steps) {
        std::vector<std::vector<int>> polygons{cycle.order()};
        const auto summarize = [&] {
            WeightSummary summary;
            summary.nu = static_cast<int>(polygons.size());
            for (const auto& polygon : polygons)
                summary.sigma_total += static_cast<int>(polygon.size());
            summary.s = summary.sigma_total - 2 * summary.nu;
            steps.push_back(summary);
        };
        summarize();
        for (const Edge& chord : chords) {
            int host = -1;
            int pos_a = -1, pos_b = -1;
            for (int i = 0; i < static_cast<int>(polygons.size()); ++i) {
                const auto& polygon = polygons[i];
                int a = -1, b = -1;
                for (int j = 0; j < static_cast<int>(polygon.size()); ++j) {
                    if (polygon[j] == chord.first) a = j;
                    if (polygon[j] == chord.second) b = j;
                }
                if (a == -1 || b == -1) continue;
                if (host != -1)
                    throw ValidationError("chord endpoints lie on two evolving faces");
                host = i;
                pos_a = a;
                pos_b = b;
            }
            if (host == -1)
                throw ValidationError("no evolving face holds both chord endpoints");
            if (pos_a > pos_b) std::swap(pos_a, pos_b);
            const auto& polygon = polygons[host];
            std::vector<int> first(polygon.begin() + pos_a, polygon.begin() + pos_b + 1);
            std::vector<int> second(polygon.begin() + pos_b, polygon.end());
            second.insert(second.end(), polygon.begin(), polygon.begin() + pos_a + 1);
            polygons[host] = std::move(first);
            polygons.push_back(std::move(second));
            summarize();
        }
        std::multiset<int> got;
        for (const auto& polygon : polygons) got.insert(static_cast<int>(polygon.size()));
        std::multiset<int> want;
        for (int f : real_faces) want.insert(map.face(f).length());
        if (got != want)
            throw ValidationError("replayed face lengths do not match the map's faces");
    };
    run_side(replay.inside_chords, inner_faces, replay.inside_steps);
    run_side(replay.outside_chords, outer_faces, replay.outside_steps);
    return replay;
}

} // namespace isobar
