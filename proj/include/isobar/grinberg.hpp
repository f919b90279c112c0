#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isobar/hamiltonian.hpp"
#include "isobar/planar_map.hpp"

namespace isobar {

// Weight of a face: boundary length minus 2.  For any Hamiltonian cycle the
// weights on each side sum to the same value h − 2, where h is the cycle
// length; this balance is the invariant everything below exploits.
int face_weight(const Face& face);
std::vector<int> face_weights(const PlanarMap& map);

// Aggregate over a face collection: ν faces, Σ total boundary length, and
// the weight sum S = Σ − 2ν.
struct WeightSummary {
    int nu = 0;
    int sigma_total = 0;
    int s = 0;
};

WeightSummary weight_summary(const std::vector<Face>& faces);

// Evaluate the weight balance across a Hamiltonian cycle: s1 over the inner
// faces, s2 over the outer faces.  holds iff s1 = s2 = h − 2, which is a
// theorem for valid inputs — a false result flags an implementation bug.
struct GrinbergIdentity {
    int s1 = 0;
    int s2 = 0;
    bool holds = false;
};

GrinbergIdentity verify_grinberg_identity(const PlanarMap& map,
                                          const HamiltonianCycle& cycle);

// Non-cycle edges split by side of the cycle, as (inner, outer), each
// sorted.  A chord's two incident faces always lie on its own side.
std::pair<std::vector<Edge>, std::vector<Edge>>
classify_chords(const PlanarMap& map, const HamiltonianCycle& cycle);

// An isobaric partition: the face set split two ways with equal weight
// sums.  side_a always contains face 0; within each side ids ascend.
struct IsobaricPartition {
    std::vector<int> side_a;
    std::vector<int> side_b;

    bool operator==(const IsobaricPartition& other) const {
        return side_a == other.side_a && side_b == other.side_b;
    }
    bool operator<(const IsobaricPartition& other) const {
        return side_a != other.side_a ? side_a < other.side_a : side_b < other.side_b;
    }
};

// All isobaric partitions with both sides nonempty, ordered lexicographically
// by side_a.  Empty when the total weight is odd.  `limit` truncates the
// output; without one, maps with more than `face_ceiling` faces are refused
// with BudgetError (raise the ceiling to force the enumeration).
std::vector<IsobaricPartition>
isobaric_partitions(const PlanarMap& map,
                    std::optional<int> limit = std::nullopt,
                    int face_ceiling = 32);

// Edges whose two incident faces lie on different sides.  For the partition
// induced by a Hamiltonian cycle the border is exactly the cycle.
std::vector<Edge> partition_border(const PlanarMap& map,
                                   const IsobaricPartition& partition);

// Why a partition's border fails to be a Hamiltonian cycle.  Checked in
// order: some vertex misses the border entirely; some vertex meets it other
// than exactly twice; the border is 2-regular but splits into several
// cycles.  nullopt when the border is a Hamiltonian cycle.
struct PartitionObstruction {
    enum class Reason { misses_vertex, not_two_regular, disconnected };
    Reason reason;
    int vertex = -1; // witness for the first two reasons

    bool operator==(const PartitionObstruction& other) const {
        return reason == other.reason && vertex == other.vertex;
    }
};

std::optional<PartitionObstruction>
partition_obstruction(const PlanarMap& map, const IsobaricPartition& partition);

// Non-Hamiltonicity certificates.
//
//   case_a:     exactly one face weight is nonzero mod 3, so no split can
//               balance mod 3 and no isobaric partition exists at all.
//   case_b:     exactly three weights are nonzero mod 3, mutually congruent,
//               and their faces are precisely the three faces at a common
//               degree-3 vertex; any balanced split keeps all three on one
//               side, so no border passes through that vertex.
//   exhaustive: the complete list of isobaric partitions, each annotated
//               with the reason its border is not a Hamiltonian cycle.
struct CertificateCaseA {
    int face_id = -1;
    int weight = 0;
};

struct CertificateCaseB {
    int vertex = -1;
    std::vector<int> face_ids; // ascending, size 3
    std::vector<int> weights;  // aligned with face_ids
};

struct CertificateExhaustive {
    std::vector<IsobaricPartition> partitions;
    std::vector<PartitionObstruction> obstructions; // aligned with partitions
};

struct Certificate {
    enum class Kind { case_a, case_b, exhaustive };
    Kind kind;
    CertificateCaseA case_a{};
    CertificateCaseB case_b{};
    CertificateExhaustive exhaustive{};
};

// Fast mod-3 certificates; empty optional when the pattern does not apply.
std::optional<Certificate> certificate_case_a(const PlanarMap& map);
std::optional<Certificate> certificate_case_b(const PlanarMap& map);

// Full decision procedure: case_a, then case_b, then exhaustion over the
// isobaric partitions.  Empty optional when some border is a Hamiltonian
// cycle — which proves Hamiltonicity constructively, so no certificate can
// exist.  Throws BudgetError past the face ceiling.
std::optional<Certificate> certify_non_hamiltonian(const PlanarMap& map,
                                                   int face_ceiling = 32);

// Independent re-verification from raw map data: recomputes weights mod 3,
// vertex incidence, or the full partition list (an exhaustive certificate
// must match it exactly, reasons included).  False for any deviation.
bool check_certificate(const PlanarMap& map, const Certificate& certificate);
// Same check, reporting the first failure; nullopt when valid.
std::optional<std::string> check_certificate_error(const PlanarMap& map,
                                                   const Certificate& certificate);

// Certificate text format, version 1 (line oriented):
//
//   certificate v1
//   kind case_a|case_b|exhaustive
//   face <id> weight <w>                        (case_a: one; case_b: three)
//   vertex <x>                                  (case_b, before face lines)
//   partitions <n>                              (exhaustive)
//   partition <side_a ids> reason <tag> [<v>]   (exhaustive, n lines)
std::string serialize_certificate(const Certificate& certificate);
Certificate parse_certificate(const std::string& text);

// Weight-multiset pattern analysis, for reasoning about maps given only
// their face-weight census (weight -> multiplicity).
bool multiset_matches_case_a(const std::map<int, int>& weights);
bool multiset_matches_case_b(const std::map<int, int>& weights);
bool multiset_admits_balanced_split(const std::map<int, int>& weights);

// Replay a chord restoration: start from a Hamiltonian cycle drawn alone
// (one face of length h on each side) and insert the chords of one side at
// a time, each splitting a single evolving face.  Every insertion adds one
// face and total length 2 to its side, so the weight sum S stays at h − 2
// throughout; the replay records the summary after each step and validates
// the final face-length census on each side against the map's real faces,
// throwing ValidationError on any mismatch.
struct ChordReplay {
    std::vector<WeightSummary> inside_steps;  // index k = after k chords
    std::vector<WeightSummary> outside_steps;
    std::vector<Edge> inside_chords;          // insertion order
    std::vector<Edge> outside_chords;
};

ChordReplay chord_restoration_replay(const PlanarMap& map,
                                     const HamiltonianCycle& cycle);

} // namespace isobar
