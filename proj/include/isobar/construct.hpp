#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isobar/planar_map.hpp"

namespace isobar {

// Parameters of the layered-triangulation family.  Validated by the
// builders: alpha >= 1 and beta ≡ 2 (mod 3) (so beta >= 2).
struct ConstructionParams {
    int alpha = 1;
    int beta = 2;
};

// A triangulated disk under construction: the filled region as a triangle
// list plus its current boundary ring.  rings records every completed
// concentric cycle C_0, C_1, ... in order (the boundary is the last ring).
struct PartialTriangulation {
    int vertex_count = 0;
    std::vector<std::array<int, 3>> triangles;
    std::vector<int> boundary;            // current outer ring, cyclic order
    std::vector<std::vector<int>> rings;  // C_0, C_1, ...
    int hub = 0;                          // the center vertex x
};

// Distinct edges of the triangle list, sorted.
std::vector<Edge> triangulation_edges(const PartialTriangulation& disk);

// Degree of every vertex in the triangle list.
std::vector<int> triangulation_degrees(const PartialTriangulation& disk);

// Triangulated disk of two concentric length-L rings: hub x joined to all
// of C_0, then a zigzag strip between C_0 and C_1.  Every C_0 vertex ends
// with degree 5 and every C_1 vertex has exactly 2 edges from inside.
// Throws ValidationError for L < 3.
PartialTriangulation zigzag_disk(int length);

// Extend the disk by one triangulated annulus.  The boundary (length 3m) is
// split into consecutive triples; each triple gains a pocket of 3 interior
// degree-5 vertices, raising the triple's degrees to 8, 5, 8, and the new
// boundary is a ring of length 4m whose vertices have exactly 2 edges from
// inside.  Requires 3 | boundary length and exactly 2 inside edges per
// boundary vertex (throws ValidationError otherwise).
PartialTriangulation annulus_layer(PartialTriangulation inner);

// The fully assembled triangulation: zigzag_disk(3^alpha * beta), alpha
// annulus layers, then an apex z joined to the whole final ring, closing
// the sphere.  layer_cycles holds C_0 .. C_{alpha+1}; |C_i| =
// 3^(alpha-i+1) * 4^(i-1) * beta for i >= 1, and z has degree 4^alpha * beta.
struct GrinbergTriangulation {
    PlanarMap map;
    std::vector<std::vector<int>> layer_cycles;
    int hub;
    int apex;
};

GrinbergTriangulation grinberg_triangulation(ConstructionParams params);

// The cubic map dual to grinberg_triangulation(params).  Its face weights
// are 3, 6, 4^alpha*beta − 2 (all multiples of 3) except the single face of
// weight 3^alpha*beta − 2 ≡ 1 (mod 3) dual to the hub — so the map has no
// isobaric partition and certificate_case_a always fires.
PlanarMap grinberg_map(ConstructionParams params);

// Embedded reference graphs: "tetrahedron", "cube", "dodecahedron", and
// "tutte" (the classical 46-vertex non-Hamiltonian cubic map, from its
// standard published adjacency).  Unknown names throw ValidationError.
PlanarMap fixture(const std::string& name);

// Face census: counts[i] = number of faces with i boundary vertices, f the
// total.  q is left empty here; callers that also compute quasi-connectivity
// may fill it in.
struct FVector {
    std::map<int, int> counts;
    int f = 0;
    std::optional<int> q;
};

FVector f_vector(const PlanarMap& map);

// Exact chromatic-number test: true iff the graph is 4-chromatic, decided
// by backtracking (3-colorability refuted, 4-coloring exhibited).  Maps
// with more than `vertex_ceiling` vertices are refused with BudgetError.
bool is_four_chromatic(const PlanarMap& map, int vertex_ceiling = 40);

} // namespace isobar
