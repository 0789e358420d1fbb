#include "udgsep/udg.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

#include "udgsep/errors.hpp"

namespace udgsep {

UnitDiskGraph UnitDiskGraph::build(std::vector<Point> points, bool strict_threshold) {
    {
        std::set<Point> uniq(points.begin(), points.end());
        if (uniq.size() != points.size())
            throw degenerate_error(degenerate_error::kind::duplicate_points,
                                   "duplicate points");
    }
    UnitDiskGraph g;
    g.points_ = std::move(points);
    const std::size_t n = g.points_.size();
    g.adj_.assign(n, {});
    g.matrix_.assign(n * n, 0);
    const Rat one(1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Rat d2 = sq_dist(g.points_[i], g.points_[j]);
            int c = cmp(d2, one);
            bool edge = strict_threshold ? c < 0 : c <= 0;
            if (edge) {
                g.adj_[i].push_back(static_cast<int>(j));
                g.adj_[j].push_back(static_cast<int>(i));
                g.matrix_[i * n + j] = 1;
                g.matrix_[j * n + i] = 1;
                ++g.edge_count_;
            }
        }
    }
    return g;
}

LevelStructure bfs_levels(const UnitDiskGraph& g, int source) {
    const int n = g.size();
    if (source < 0 || source >= n) throw std::invalid_argument("bfs_levels: bad source");
    LevelStructure ls;
    ls.source = source;
    ls.dist.assign(static_cast<std::size_t>(n), kUnreachable);
    std::queue<int> q;
    ls.dist[static_cast<std::size_t>(source)] = 0;
    q.push(source);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        int d = ls.dist[static_cast<std::size_t>(v)];
        if (static_cast<int>(ls.levels.size()) <= d) ls.levels.resize(static_cast<std::size_t>(d) + 1);
        ls.levels[static_cast<std::size_t>(d)].push_back(v);
        for (int nb : g.neighbors(v)) {
            if (ls.dist[static_cast<std::size_t>(nb)] == kUnreachable) {
                ls.dist[static_cast<std::size_t>(nb)] = d + 1;
                q.push(nb);
            }
        }
    }
    return ls;
}

std::vector<int> closed_neighborhood(const UnitDiskGraph& g, const std::vector<int>& a) {
    std::vector<char> in(static_cast<std::size_t>(g.size()), 0);
    for (int v : a) {
        in[static_cast<std::size_t>(v)] = 1;
        for (int nb : g.neighbors(v)) in[static_cast<std::size_t>(nb)] = 1;
    }
    std::vector<int> out;
    for (int v = 0; v < g.size(); ++v)
        if (in[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

bool disk_crossing_adjacent(const UnitDiskGraph& g, int u, int v, int x) {
    if (!g.adjacent(u, v)) throw std::invalid_argument("disk_crossing_adjacent: uv not an edge");
    if (x == u || x == v) throw std::invalid_argument("disk_crossing_adjacent: x coincides with u or v");
    return g.adjacent(x, u) || g.adjacent(x, v);
}

bool crominates(const UnitDiskGraph& g, int u, int v, int x, int y) {
    if (u == v || x == y || x == u || x == v || y == u || y == v)
        throw std::invalid_argument("crominates: vertices not distinct");
    if (!g.adjacent(x, y)) throw std::invalid_argument("crominates: xy not an edge");
    if (!segments_cross(Segment(g.point(u), g.point(v)), Segment(g.point(x), g.point(y))))
        return true;
    return g.adjacent(x, u) || g.adjacent(x, v) || g.adjacent(y, u) || g.adjacent(y, v);
}

}  // namespace udgsep
