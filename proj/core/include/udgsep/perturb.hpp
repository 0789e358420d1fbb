#pragma once

// Combinatorial perturbation of a path system: one copy of each vertex per
// path that visits it, path edges realizing the perturbed paths, vertex
// edges between strand-consecutive copies, inherited outer-closure edges,
// and a completion to a full triangulation using only faithful or
// same-vertex chords. The spanning tree is the spider formed by the paths,
// which meet only at the unperturbed source.

#include <vector>

#include "udgsep/pathsys.hpp"

namespace udgsep {

enum class PerturbEdgeCat { Path, Vertex, Tri, Outer };

struct PerturbedGraph {
    struct Edge {
        int a, b;  // node ids
        PerturbEdgeCat cat;
    };

    // nodes
    int source_node = -1;
    std::vector<int> node_original;  // original vertex per node
    std::vector<int> node_path;      // visiting path id (-1 for the source node)
    std::vector<int> node_pos;       // index on the path's materialization
    std::vector<std::vector<int>> path_nodes;  // per path: node chain (origin .. last before source)

    // embedding
    std::vector<Edge> edges;
    std::vector<std::vector<int>> rotation;  // per node: CCW outgoing half ids

    // spider tree (tree edges are exactly the Path edges)
    std::vector<int> parent;       // node id, -1 at the source node
    std::vector<int> parent_edge;  // edge id, -1 at the source node

    // weights (filled by assign_weights)
    std::vector<long long> weight;
    long long total_weight = 0;

    // faces of the final triangulated embedding
    std::vector<std::vector<int>> face_halves;  // per face: boundary half ids
    std::vector<int> half_face;                 // face id per half

    int node_count() const { return static_cast<int>(node_original.size()); }
    int half_tail(int h) const {
        const Edge& e = edges[static_cast<std::size_t>(h / 2)];
        return (h & 1) ? e.b : e.a;
    }
    int half_head(int h) const {
        const Edge& e = edges[static_cast<std::size_t>(h / 2)];
        return (h & 1) ? e.a : e.b;
    }
    static int reverse_half(int h) { return h ^ 1; }
};

/// Build the perturbed, fully triangulated planar graph. Throws
/// internal_error if some face cannot be triangulated with faithful or
/// same-vertex chords (impossible for a valid non-crossing path system).
PerturbedGraph perturb_and_triangulate(const PathSystem& ps,
                                       const AugmentedTriangulation& at,
                                       const UnitDiskGraph& g);

/// One unit of weight per original vertex, carried by the copy on that
/// vertex's own path (the source carries its own unit).
void assign_weights(PerturbedGraph& pg);

}  // namespace udgsep
