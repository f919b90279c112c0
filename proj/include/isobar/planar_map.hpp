#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "isobar/errors.hpp"

namespace isobar {

// Directed edge (from, to).  The reverse dart is (to, from).
using Dart = std::pair<int, int>;
// Undirected edge, normalized so that first < second.
using Edge = std::pair<int, int>;

inline Edge edge_of(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }
inline Dart reverse(Dart d) { return {d.second, d.first}; }

// One face of an embedded map.  The boundary is the dart orbit of the
// face-successor permutation, listed starting from the face's minimal dart.
struct Face {
    int id = -1;
    std::vector<Dart> boundary;

    int length() const { return static_cast<int>(boundary.size()); }
    // Boundary vertices in traversal order (dart origins).  A face of a map
    // with cut edges may repeat vertices.
    std::vector<int> vertices() const;
    bool contains_vertex(int v) const;
};

// A planar map: a connected simple graph together with a rotation system,
// the counterclockwise cyclic neighbor order at every vertex.  Construction
// validates symmetry, connectivity, minimum degree 2, and Euler's formula
// V - E + F = 2, so every instance is a genus-zero embedding.
//
// Faces are the orbits of the face-successor permutation: the successor of
// dart (u,v) is (v,w) where w immediately follows u in the rotation at v.
// Faces are numbered in ascending order of their minimal dart.
class PlanarMap {
  public:
    explicit PlanarMap(std::vector<std::vector<int>> rotations,
                       std::optional<Dart> outer_dart = std::nullopt);

    int vertex_count() const { return static_cast<int>(rotations_.size()); }
    int edge_count() const { return edge_count_; }
    int face_count() const { return static_cast<int>(faces_.size()); }

    const std::vector<std::vector<int>>& rotations() const { return rotations_; }
    const std::vector<int>& rotation(int v) const { return rotations_.at(v); }
    int degree(int v) const { return static_cast<int>(rotations_.at(v).size()); }
    bool adjacent(int u, int v) const;

    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(int id) const { return faces_.at(id); }
    int outer_face() const { return outer_face_; }

    // Face lying to the left of the dart, i.e. the orbit containing it.
    int face_left_of(Dart d) const;
    // The two faces incident to an undirected edge (may coincide on maps
    // with cut edges).
    std::pair<int, int> faces_of_edge(Edge e) const;

    Dart face_successor(Dart d) const;

    // All undirected edges, sorted.
    const std::vector<Edge>& edges() const { return edges_; }

    bool operator==(const PlanarMap& other) const {
        return rotations_ == other.rotations_ && outer_face_ == other.outer_face_;
    }

  private:
    std::vector<std::vector<int>> rotations_;
    std::vector<std::unordered_map<int, int>> nbr_index_; // v -> (u -> position)
    std::vector<std::vector<int>> dart_face_;             // v -> position -> face id
    std::vector<Face> faces_;
    std::vector<Edge> edges_;
    int edge_count_ = 0;
    int outer_face_ = 0;

    void validate_structure() const;
    void extract_faces();
};

// Map text format, version 1.
//
//   planarmap 1
//   V <n>
//   <id>: <k> <k neighbor ids in counterclockwise order>
//   outer: <u> <v>          (optional; a dart on the outer face)
//
// Lines starting with '#' are comments.  serialize_map(parse_map(s)) == s
// for canonically formatted input; parse_map(serialize_map(m)) == m always.
PlanarMap parse_map(const std::string& text);
std::string serialize_map(const PlanarMap& map);

// Dual map: one vertex per face; the rotation at a face lists the faces on
// the other side of its boundary darts, in boundary order.  Fails if the
// dual would have a loop or multiedge (faces sharing more than one edge).
PlanarMap dual(const PlanarMap& map);

// Rebuild a map from a closed face cover: every edge must appear in exactly
// two of the given faces.  Orientations are reconciled automatically, so the
// faces may be listed with arbitrary chirality.  Used by generators and
// tests to assemble maps from polygon lists.
PlanarMap map_from_faces(int vertex_count,
                         const std::vector<std::vector<int>>& faces,
                         std::optional<Dart> outer_dart = std::nullopt);

} // namespace isobar
