#pragma once

#include <string>
#include <vector>

#include "isobar/planar_map.hpp"

namespace isobar {

// Render the map as an undirected DOT graph: every vertex declared in
// ascending order, every edge once (smaller endpoint first), edges in the
// highlight set marked [style=bold].
std::string export_dot(const PlanarMap& map,
                       const std::vector<Edge>& highlight = {});

} // namespace isobar
