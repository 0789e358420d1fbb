#pragma once

// Delaunay triangulation with an explicit combinatorial embedding, a
// combinatorial closure of the outer face, dual face adjacency, and the
// Voronoi cell walk along a straight segment.

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "udgsep/geom.hpp"

namespace udgsep {

struct Triangulation {
    std::vector<Point> sites;
    std::vector<std::pair<int, int>> edges;        // canonical (a < b), sorted
    std::map<std::pair<int, int>, int> edge_index;
    std::vector<std::vector<int>> rotation;        // per site: CCW neighbor ring
    std::vector<std::vector<int>> faces;           // vertex cycles
    int outer_face = -1;                           // the unbounded face
    std::vector<int> hull;                         // convex hull, CCW
    std::vector<std::array<int, 2>> edge_faces;    // two incident faces per edge

    bool has_edge(int a, int b) const {
        if (a > b) std::swap(a, b);
        return edge_index.count({a, b}) != 0;
    }
    const Point& site(int v) const { return sites[static_cast<std::size_t>(v)]; }
};

/// Abstract embedding after triangulating the outer face by a fan of
/// combinatorial edges. The added edges live outside the convex hull and
/// have no straight-line realization; renderers must skip them.
struct AugmentedTriangulation {
    Triangulation base;
    int apex = -1;                                  // fan apex (hull vertex)
    std::vector<std::pair<int, int>> outer_edges;   // the added fan edges
    std::vector<std::pair<int, int>> edges;         // base edges then outer edges
    std::map<std::pair<int, int>, int> edge_index;
    std::vector<std::vector<int>> rotation;         // combined rings
    std::vector<std::vector<int>> faces;            // all triangles
    std::vector<std::array<int, 2>> edge_faces;
    // Per site: outer-edge partners in the rotational order they occupy in
    // the gap outside the hull.
    std::vector<std::vector<int>> outer_at;

    bool is_outer_pair(int a, int b) const {
        if (a > b) std::swap(a, b);
        auto it = edge_index.find({a, b});
        return it != edge_index.end() &&
               it->second >= static_cast<int>(base.edges.size());
    }
};

/// Face adjacency across primal edges plus the dual graph itself.
struct DualAdjacency {
    std::vector<std::array<int, 2>> edge_faces;       // per primal edge
    std::vector<std::vector<int>> face_neighbors;     // dual adjacency lists
};

/// Exact Delaunay triangulation. Cocircular degeneracies are resolved by a
/// deterministic rule: among the diagonals of a cocircular quad, the one
/// with the lexicographically smallest (min index, max index) pair wins.
/// Throws degenerate_error for < 3 points, duplicates, or all-collinear
/// input.
Triangulation build_delaunay(const std::vector<Point>& points);

/// Fan-triangulate the outer face from one hull vertex, chosen as the
/// smallest-index hull vertex with no Delaunay chord to a non-adjacent hull
/// vertex (such a vertex always exists), so added edges never duplicate
/// Delaunay edges. Adds exactly hull_size - 3 edges.
AugmentedTriangulation close_outer_face(const Triangulation& t);

DualAdjacency dual_adjacency(const AugmentedTriangulation& t);

/// Sites whose Voronoi cells the open segment from u to w traverses, in
/// order. Consecutive outputs are Delaunay neighbors. Ties (segment through
/// a Voronoi vertex) resolve to the smallest site index.
std::vector<int> voronoi_segment_walk(const Triangulation& t, int u, int w);

}  // namespace udgsep
