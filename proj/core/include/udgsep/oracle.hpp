#pragma once

// Brute-force verifiers, deliberately independent of the constructions they
// check: plain BFS, exhaustive pair scans, and face flood fills instead of
// the pipeline's incremental machinery.

#include <string>
#include <utility>
#include <vector>

#include "udgsep/pathsys.hpp"
#include "udgsep/perturb.hpp"
#include "udgsep/separator.hpp"

namespace udgsep {

struct VerificationReport {
    std::string name;
    bool pass = true;
    std::vector<std::string> witnesses;  // empty iff pass
    std::vector<std::pair<std::string, long long>> counts;

    void fail(std::string witness) {
        pass = false;
        if (witnesses.size() < 32) witnesses.push_back(std::move(witness));
    }
};

/// Components of g minus the separator, each at most floor(num*n/den)
/// vertices, plus a brute-force scan that no surviving edge joins two
/// components.
VerificationReport check_separator_balance(const UnitDiskGraph& g,
                                           const std::vector<int>& separator_set,
                                           long long bound_num = 2, long long bound_den = 3);

/// (a) anchors lie on the path, (b) anchors form a BFS-certified shortest
/// path to s, (c) every other path vertex is adjacent to an anchor.
VerificationReport check_pseudo_shortest(const UnitDiskGraph& g, const std::vector<int>& path,
                                         const std::vector<int>& anchors, int s);

/// All pairs of materialized paths report no crossing.
VerificationReport check_noncrossing_system(const PathSystem& ps, const UnitDiskGraph& g);

/// The chain-level worker behind check_noncrossing_system.
VerificationReport check_noncrossing_chains(const std::vector<std::vector<Point>>& chains);

/// The three Delaunay-path properties, exactly, over all index pairs and
/// triples of the segment.
VerificationReport check_dd_properties(const DelaunaySegment& seg,
                                       const std::vector<Point>& points);

/// Every (Delaunay edge, unit-disk edge) pair with four distinct vertices
/// passes the cross-domination predicate.
VerificationReport check_crominating_all(const std::vector<Point>& points,
                                         bool strict_threshold = false);

/// Spanning, Delaunay-edge-only, simple: the basic path-system facts.
VerificationReport check_path_system(const PathSystem& ps, const UnitDiskGraph& g,
                                     const Triangulation& tri);

/// Euler formula by independent face traversal, all faces triangles,
/// faithful Tri edges, same-vertex Vertex edges, spanning spider tree.
VerificationReport check_perturbed_certificate(const PerturbedGraph& pg,
                                               const AugmentedTriangulation& at);

/// Separator structure: the set equals the 1-neighborhood closure of the two
/// BFS-certified shortest paths plus at most two apex vertices.
VerificationReport check_separator_structure(const UnitDiskGraph& g, const SeparatorResult& r);

/// Surviving edges cross no drawn edge of the cycle image: exact segment
/// tests against the suffix edges and the apex segment.
VerificationReport check_crossing_kill(const UnitDiskGraph& g, const SeparatorResult& r);

/// Flood-fill face counting for one non-tree edge: weights strictly inside
/// and strictly outside its fundamental cycle. The dual-subtree accumulation
/// must agree for every non-tree edge.
std::pair<long long, long long> brute_force_cycle_weights(const PerturbedGraph& pg,
                                                          int non_tree_edge);

/// Dual-subtree inside/outside weights equal the flood fill for every
/// non-tree edge.
VerificationReport check_cycle_weight_equivalence(const PerturbedGraph& pg);

}  // namespace udgsep
