#pragma once

// Spanning non-crossing path system of pseudo-shortest paths rooted at a
// source, built level by level from Delaunay-edge walks. Paths are stored
// compactly (one Delaunay segment plus a continuation reference per vertex);
// the relative order of path strands along every Delaunay edge is maintained
// combinatorially, with no numeric epsilon anywhere.

#include <map>
#include <optional>
#include <vector>

#include "udgsep/delaunay.hpp"
#include "udgsep/udg.hpp"

namespace udgsep {

/// Walk from a vertex down to its Euclidean-nearest neighbor in the previous
/// BFS level, along Delaunay edges. All vertices except the last share the
/// origin's level; the last is the anchor one level down.
struct DelaunaySegment {
    int origin = -1;
    int anchor = -1;
    std::vector<int> vertices;  // origin ... anchor
};

struct PathRecord {
    struct Continuation {
        int path;      // an earlier record; its suffix starting at `junction` follows
        int junction;  // equals the segment anchor
    };

    int origin = -1;
    std::optional<DelaunaySegment> segment;   // absent for the source record
    std::optional<Continuation> continuation; // absent for levels <= 1
    std::vector<int> anchors;                 // one vertex per level, origin down to source
};

struct PathSystem {
    int source = -1;
    std::vector<PathRecord> records;  // records[v].origin == v
    LevelStructure levels;
    // Strand order per Delaunay edge: path ids across the edge's ribbon,
    // stored counterclockwise around the smaller endpoint. Viewed from the
    // larger endpoint the order reverses.
    std::map<std::pair<int, int>, std::vector<int>> corridors;

    const std::vector<int>& corridor(int a, int b) const {
        static const std::vector<int> empty;
        if (a > b) std::swap(a, b);
        auto it = corridors.find({a, b});
        return it == corridors.end() ? empty : it->second;
    }
};

/// Euclidean-nearest member of the previous level; ties break to the
/// smallest vertex index. The result is always within unit distance.
int nearest_lower_neighbor(const UnitDiskGraph& g, const LevelStructure& levels, int u);

/// Voronoi walk from u to w (|u - w| <= 1 required), checked against the
/// three Delaunay-path properties: pairwise unit distances, containment in
/// the disk with uw as diameter, and strictly increasing distances from
/// each endpoint toward the other. A violation is an internal error.
std::vector<int> delaunay_path(const Triangulation& t, int u, int w);

/// Level-by-level construction. Requires every vertex reachable from s.
PathSystem build_path_system(const UnitDiskGraph& g, const Triangulation& t, int s);

/// Expand the compact record chain into the full vertex list from u to the
/// source. The result is simple and ends at the source.
std::vector<int> materialize_path(const PathSystem& ps, int u);

/// Anchor shortest path of the suffix of u's path starting at x: the anchors
/// from x down when x is an anchor, otherwise x followed by all anchors at
/// levels strictly below x's level.
std::vector<int> path_anchors(const PathSystem& ps, int u, int x);

}  // namespace udgsep
