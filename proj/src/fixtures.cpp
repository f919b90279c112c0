#include "isobar/construct.hpp"

namespace isobar {

namespace {

// Reference rotation systems.  Vertex ids follow the standard adjacency
// listings; rotations were derived from planar embeddings and are validated
// by the PlanarMap constructor on every fixture() call.

const std::vector<std::vector<int>> k_tetrahedron = {
    {1, 3, 2},
    {0, 2, 3},
    {1, 0, 3},
    {2, 0, 1},
};

const std::vector<std::vector<int>> k_cube = {
    {1, 4, 3},
    {0, 2, 5},
    {1, 3, 6},
    {2, 0, 7},
    {7, 0, 5},
    {4, 1, 6},
    {5, 2, 7},
    {3, 4, 6},
};

const std::vector<std::vector<int>> k_dodecahedron = {
    {1, 10, 19},
    {0, 2, 8},
    {1, 3, 6},
    {2, 19, 4},
    {3, 17, 5},
    {4, 15, 6},
    {5, 7, 2},
    {6, 14, 8},
    {7, 9, 1},
    {8, 13, 10},
    {9, 11, 0},
    {10, 12, 18},
    {11, 13, 16},
    {12, 9, 14},
    {13, 7, 15},
    {14, 5, 16},
    {15, 17, 12},
    {16, 4, 18},
    {17, 19, 11},
    {18, 3, 0},
};

// The classical 46-vertex cubic non-Hamiltonian map built from three
// pentagon fragments around a central vertex.
const std::vector<std::vector<int>> k_tutte = {
    {1, 3, 2},
    {0, 4, 26},
    {10, 0, 11},
    {18, 0, 19},
    {1, 5, 33},
    {4, 6, 29},
    {5, 7, 27},
    {6, 8, 14},
    {7, 9, 38},
    {8, 10, 37},
    {9, 2, 39},
    {2, 12, 39},
    {11, 13, 35},
    {12, 15, 14},
    {13, 7, 34},
    {13, 16, 22},
    {15, 17, 44},
    {16, 18, 43},
    {17, 3, 45},
    {3, 20, 45},
    {19, 21, 41},
    {20, 23, 22},
    {21, 15, 40},
    {21, 24, 27},
    {23, 25, 32},
    {24, 26, 31},
    {25, 1, 33},
    {28, 6, 23},
    {29, 27, 32},
    {30, 5, 28},
    {33, 29, 31},
    {32, 25, 30},
    {28, 24, 31},
    {26, 4, 30},
    {14, 38, 35},
    {34, 36, 12},
    {35, 37, 39},
    {36, 38, 9},
    {37, 34, 8},
    {36, 10, 11},
    {22, 44, 41},
    {40, 42, 20},
    {41, 43, 45},
    {42, 44, 17},
    {43, 40, 16},
    {42, 18, 19},
};

} // namespace

PlanarMap fixture(const std::string& name) {
    if (name == "tetrahedron") return PlanarMap(k_tetrahedron);
    if (name == "cube") return PlanarMap(k_cube);
    if (name == "dodecahedron") return PlanarMap(k_dodecahedron);
    if (name == "tutte") return PlanarMap(k_tutte);
    throw ValidationError("unknown fixture '" + name +
                          "' (expected tetrahedron, cube, dodecahedron, or tutte)");
}

} // namespace isobar
