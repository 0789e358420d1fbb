#pragma once

// Balanced fundamental-cycle separator on the perturbed graph, mapped back
// to two path suffixes with their anchor shortest paths, and the final
// 1-neighborhood separator of the unit disk graph.

#include <optional>
#include <vector>

#include "udgsep/perturb.hpp"

namespace udgsep {

struct FundamentalCycle {
    int apex_edge = -1;             // non-tree edge id in the perturbed graph
    std::vector<int> left_nodes;    // tree path: first apex endpoint .. source node
    std::vector<int> right_nodes;   // tree path: second apex endpoint .. source node
    std::vector<int> cycle_nodes;   // the reduced simple cycle (apex ends .. meeting node)
    long long inside_weight = 0;    // weight strictly enclosed away from the root face
    long long outside_weight = 0;
};

/// Dual-tree subtree-weight search for a non-tree edge whose fundamental
/// cycle leaves at most 2W/3 weight on each side. Ties break to the
/// smallest edge id. Existence is guaranteed on a triangulated planar
/// graph; failure to find one is an internal error.
FundamentalCycle find_balanced_fundamental_cycle(const PerturbedGraph& pg);

/// The face the dual tree is rooted at: one bordering the outer closure
/// when present, face 0 otherwise.
int cycle_root_face(const PerturbedGraph& pg);

/// Weight strictly enclosed (away from the root face) by the fundamental
/// cycle of each non-tree edge, by dual-subtree accumulation; -1 for tree
/// edges.
std::vector<long long> dual_subtree_inside_weights(const PerturbedGraph& pg);

/// Total weight carried by the fundamental cycle of a non-tree edge.
long long fundamental_cycle_weight(const PerturbedGraph& pg, int edge);

enum class ApexKind { DelaunayEdge, SameVertex, OuterEdge };

struct MappedCycle {
    ApexKind kind = ApexKind::DelaunayEdge;
    int apex_u = -1, apex_v = -1;    // original vertices (equal for SameVertex)
    std::vector<int> suffix_u, suffix_v;  // suffixes of materialized paths
    std::vector<int> sp_u, sp_v;          // their anchor shortest paths
};

MappedCycle map_back_cycle(const FundamentalCycle& cycle, const PathSystem& ps,
                           const PerturbedGraph& pg, const AugmentedTriangulation& at);

/// N1 over the two anchor shortest paths plus the apex endpoints.
std::vector<int> one_neighborhood_closure(const UnitDiskGraph& g,
                                          const std::vector<int>& sp_u,
                                          const std::vector<int>& sp_v,
                                          const std::vector<int>& apex_vertices);

struct SeparatorOptions {
    bool strict_threshold = false;  // adjacency |p - q| < 1 instead of <= 1
};

struct StageTimings {
    double udg_ms = 0, delaunay_ms = 0, pathsys_ms = 0, perturb_ms = 0,
           cycle_ms = 0, closure_ms = 0, total_ms = 0;
};

struct SeparatorResult {
    enum class Mode { Pipeline, TrivialSmall, NoBigComponent };

    Mode mode = Mode::Pipeline;
    int n = 0;
    int source = -1;
    std::optional<ApexKind> apex_kind;
    int apex_u = -1, apex_v = -1;
    std::vector<int> suffix_u, suffix_v;
    std::vector<int> sp_u, sp_v;
    std::vector<int> separator_set;            // sorted
    std::vector<std::vector<int>> components;  // of G - separator_set, sorted
    long long max_component = 0;
    double balance = 0;                        // max_component / n
    StageTimings timings;
};

/// Everything the pipeline built, in component-local indexing, for callers
/// that drive the verification suite. `ran` is false when the pipeline
/// short-circuited (no big component, or a one/two-vertex one).
struct PipelineArtifacts {
    bool ran = false;
    std::vector<int> to_global;  // local index -> instance index
    UnitDiskGraph local_graph;
    Triangulation tri;
    AugmentedTriangulation at;
    PathSystem ps;
    PerturbedGraph pg;
    FundamentalCycle cycle;
    MappedCycle mapped;
};

/// End-to-end pipeline. Runs on the unique component larger than 2n/3 when
/// one exists; otherwise returns the components unchanged with an empty
/// separator. Components of one or two vertices that still exceed the bound
/// become the separator outright. Throws degenerate_error for duplicate
/// points or an all-collinear big component.
SeparatorResult compute_separator(const std::vector<Point>& points,
                                  std::optional<int> source = std::nullopt,
                                  const SeparatorOptions& opts = {},
                                  PipelineArtifacts* artifacts = nullptr);

}  // namespace udgsep
