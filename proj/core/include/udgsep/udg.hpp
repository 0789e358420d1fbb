#pragma once

// Unit disk graph over exact points: threshold adjacency, BFS level
// structure, neighborhood closures, and the crossing-domination predicates.

#include <vector>

#include "udgsep/geom.hpp"

namespace udgsep {

class UnitDiskGraph {
public:
    /// Adjacency is |p_i - p_j| <= 1 decided exactly on squared distances;
    /// with strict_threshold the boundary case |p_i - p_j| = 1 is excluded.
    static UnitDiskGraph build(std::vector<Point> points, bool strict_threshold = false);

    int size() const { return static_cast<int>(points_.size()); }
    const std::vector<Point>& points() const { return points_; }
    const Point& point(int v) const { return points_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool adjacent(int a, int b) const {
        return a != b && matrix_[static_cast<std::size_t>(a) * points_.size() + static_cast<std::size_t>(b)];
    }
    long long edge_count() const { return edge_count_; }

private:
    std::vector<Point> points_;
    std::vector<std::vector<int>> adj_;   // sorted neighbor lists
    std::vector<char> matrix_;            // constant-time membership
    long long edge_count_ = 0;
};

constexpr int kUnreachable = -1;

struct LevelStructure {
    int source = 0;
    std::vector<int> dist;                 // hop distance or kUnreachable
    std::vector<std::vector<int>> levels;  // levels[a] = vertices at distance a

    int level(int v) const { return dist[static_cast<std::size_t>(v)]; }
    int depth() const { return static_cast<int>(levels.size()) - 1; }
};

LevelStructure bfs_levels(const UnitDiskGraph& g, int source);

/// N1[A]: A together with every vertex adjacent to A.
std::vector<int> closed_neighborhood(const UnitDiskGraph& g, const std::vector<int>& a);

/// Whether x is adjacent to u or to v. Preconditions: uv is an edge and
/// x differs from both (throws std::invalid_argument otherwise).
bool disk_crossing_adjacent(const UnitDiskGraph& g, int u, int v, int x);

/// Cross-domination: true iff the segments uv and xy do not cross, or at
/// least one of x, y is adjacent to at least one of u, v. xy must be an
/// edge of g and the four vertices distinct.
bool crominates(const UnitDiskGraph& g, int u, int v, int x, int y);

}  // namespace udgsep
