#include "isobar/dot.hpp"

#include <set>
#include <sstream>

namespace isobar {

std::string export_dot(const PlanarMap& map, const std::vector<Edge>& highlight) {
    std::set<Edge> bold;
    for (const Edge& e : highlight) bold.insert(edge_of(e.first, e.second));

    std::ostringstream out;
    out << "graph map {\n";
    for (int v = 0; v < map.vertex_count(); ++v) out << "  " << v << ";\n";
    for (const Edge& e : map.edges()) {
        out << "  " << e.first << " -- " << e.second;
        if (bold.count(e)) out << " [style=bold]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace isobar
