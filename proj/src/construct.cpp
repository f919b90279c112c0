#include "isobar/construct.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace isobar {

std::vector<Edge> triangulation_edges(const PartialTriangulation& disk) {
    std::set<Edge> edges;
    for (const auto& t : disk.triangles)
        for (int i = 0; i < 3; ++i) edges.insert(edge_of(t[i], t[(i + 1) % 3]));
    return {edges.begin(), edges.end()};
}

std::vector<int> triangulation_degrees(const PartialTriangulation& disk) {
    std::vector<int> degree(disk.vertex_count, 0);
    for (const Edge& e : triangulation_edges(disk)) {
        ++degree[e.first];
        ++degree[e.second];
    }
    return degree;
}

PartialTriangulation zigzag_disk(int length) {
    if (length < 3) throw ValidationError("ring length must be at least 3");
    const int L = length;
    PartialTriangulation disk;
    disk.vertex_count = 2 * L + 1;
    disk.hub = 0;
    std::vector<int> ring_a(L), ring_b(L);
    for (int i = 0; i < L; ++i) {
        ring_a[i] = 1 + i;
        ring_b[i] = 1 + L + i;
    }
    for (int i = 0; i < L; ++i) {
        const int j = (i + 1) % L;
        disk.triangles.push_back({disk.hub, ring_a[i], ring_a[j]});
        // Strip between the rings: each inner vertex leans on two outer
        // ones, which leaves every outer vertex with exactly 2 inside edges.
        disk.triangles.push_back({ring_a[i], ring_b[i], ring_b[j]});
        disk.triangles.push_back({ring_a[i], ring_b[j], ring_a[j]});
    }
    disk.boundary = ring_b;
    disk.rings = {std::move(ring_a), std::move(ring_b)};
    return disk;
}

PartialTriangulation annulus_layer(PartialTriangulation inner) {
    const std::vector<int> ring = inner.boundary;
    const int n = static_cast<int>(ring.size());
    if (n % 3 != 0) throw ValidationError("boundary length must be divisible by 3");
    const int m = n / 3;

    // Feature check: a boundary vertex carries its 2 ring edges plus
    // exactly 2 edges from inside, so its current degree must be 4.
    const std::vector<int> degree = triangulation_degrees(inner);
    for (int v : ring)
        if (degree[v] != 4)
            throw ValidationError("boundary vertex " + std::to_string(v) +
                                  " does not have exactly 2 inside edges");

    // Per boundary triple (p, q, r): a pocket of three new vertices.  The
    // pentagon p-q-r-g3-g1 is fanned from its center g2, which buries q at
    // degree 5 and lifts p and r to degree 8 once the outer strip lands on
    // them.  The intermediate cycle through p, g1, g3, r (closed across
    // triples by ring edges r-p') has length 4m.
    std::vector<int> mid;
    const int gadget_base = inner.vertex_count;
    for (int t = 0; t < m; ++t) {
        const int p = ring[3 * t], q = ring[3 * t + 1], r = ring[3 * t + 2];
        const int g1 = gadget_base + 3 * t;
        const int g2 = gadget_base + 3 * t + 1;
        const int g3 = gadget_base + 3 * t + 2;
        inner.triangles.push_back({g2, p, q});
        inner.triangles.push_back({g2, q, r});
        inner.triangles.push_back({g2, r, g3});
        inner.triangles.push_back({g2, g3, g1});
        inner.triangles.push_back({g2, g1, p});
        mid.insert(mid.end(), {p, g1, g3, r});
    }

    // Zigzag strip from the intermediate cycle to the fresh outer ring,
    // leaving every new ring vertex with exactly 2 inside edges again.
    std::vector<int> outer(4 * m);
    const int outer_base = gadget_base + 3 * m;
    for (int k = 0; k < 4 * m; ++k) outer[k] = outer_base + k;
    for (int k = 0; k < 4 * m; ++k) {
        const int j = (k + 1) % (4 * m);
        inner.triangles.push_back({mid[k], outer[k], outer[j]});
        inner.triangles.push_back({mid[k], outer[j], mid[j]});
    }

    inner.vertex_count = outer_base + 4 * m;
    inner.boundary = outer;
    inner.rings.push_back(std::move(outer));
    return inner;
}

namespace {

void validate_params(const ConstructionParams& params) {
    if (params.alpha < 1) throw ValidationError("alpha must be at least 1");
    if (params.beta < 1 || params.beta % 3 != 2)
        throw ValidationError("beta must be ≡ 2 (mod 3)");
}

} // namespace

GrinbergTriangulation grinberg_triangulation(ConstructionParams params) {
    validate_params(params);
    long long length = params.beta;
    for (int i = 0; i < params.alpha; ++i) length *= 3;
    // The rings shrink by 3/4 per layer from 3^alpha*beta, so the total
    // size stays within a small multiple of the first ring.
    if (length > 100'000)
        throw BudgetError("construction would exceed 100000 ring vertices");

    PartialTriangulation disk = zigzag_disk(static_cast<int>(length));
    for (int i = 0; i < params.alpha; ++i) disk = annulus_layer(disk);

    const int apex = disk.vertex_count;
    const std::vector<int>& ring = disk.boundary;
    const int n = static_cast<int>(ring.size());
    for (int k = 0; k < n; ++k)
        disk.triangles.push_back({apex, ring[k], ring[(k + 1) % n]});

    std::vector<std::vector<int>> faces;
    faces.reserve(disk.triangles.size());
    for (const auto& t : disk.triangles) faces.push_back({t[0], t[1], t[2]});

    GrinbergTriangulation result{
        map_from_faces(apex + 1, faces, Dart{apex, ring[0]}),
        disk.rings,
        disk.hub,
        apex,
    };
    return result;
}

PlanarMap grinberg_map(ConstructionParams params) {
    return dual(grinberg_triangulation(params).map);
}

FVector f_vector(const PlanarMap& map) {
    // sum over i of i * counts[i] is twice the edge count: each face length
    // counts darts and every edge carries two darts.
    FVector census;
    for (const Face& face : map.faces()) ++census.counts[face.length()];
    census.f = map.face_count();
    return census;
}

namespace {

// Exact k-colorability by backtracking: most-constrained vertex first,
// colors capped at one above the count already in use (color classes are
// interchangeable).
bool colorable(const PlanarMap& map, int k) {
    const int n = map.vertex_count();
    std::vector<int> color(n, -1);
    const auto dfs = [&](auto&& self, int colored, int used) -> bool {
        if (colored == n) return true;
        int pick = -1, best_tied = -1, best_degree = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] != -1) continue;
            int tied = 0;
            std::set<int> seen;
            for (int u : map.rotation(v))
                if (color[u] != -1 && seen.insert(color[u]).second) ++tied;
            if (tied > best_tied || (tied == best_tied && map.degree(v) > best_degree)) {
                pick = v;
                best_tied = tied;
                best_degree = map.degree(v);
            }
        }
        for (int c = 0; c < std::min(k, used + 1); ++c) {
            bool clash = false;
            for (int u : map.rotation(pick))
                if (color[u] == c) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            color[pick] = c;
            if (self(self, colored + 1, std::max(used, c + 1))) return true;
            color[pick] = -1;
        }
        return false;
    };
    return dfs(dfs, 0, 0);
}

} // namespace

bool is_four_chromatic(const PlanarMap& map, int vertex_ceiling) {
    if (map.vertex_count() > vertex_ceiling)
        throw BudgetError("map has " + std::to_string(map.vertex_count()) +
                          " vertices, above the exact-coloring ceiling of " +
                          std::to_string(vertex_ceiling));
    return !colorable(map, 3) && colorable(map, 4);
}

} // namespace isobar
