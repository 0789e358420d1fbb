#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "udgsep/errors.hpp"
#include "udgsep/instance.hpp"
#include "udgsep/oracle.hpp"
#include "udgsep/pathsys.hpp"

using namespace udgsep;

namespace {

struct Fixture {
    std::vector<Point> pts;
    UnitDiskGraph g = UnitDiskGraph::build({{0, 0}, {1, 0}, {0, 1}});
    Triangulation tri = build_delaunay({{0, 0}, {1, 0}, {0, 1}});

    explicit Fixture(std::vector<Point> p) : pts(std::move(p)) {
        g = UnitDiskGraph::build(pts);
        tri = build_delaunay(pts);
    }
};

// star: source at the origin, k leaves at radius ~0.9, spread angles with
// slightly varied radii to stay in general position
std::vector<Point> star_points(int k) {
    std::vector<Point> pts{{0, 0}};
    // hand-placed directions, radius ~0.85..0.93
    std::vector<std::pair<Rat, Rat>> dirs{
        {Rat(87, 100), Rat(3, 100)},    {Rat(25, 100), Rat(85, 100)},
        {Rat(-55, 100), Rat(65, 100)},  {Rat(-88, 100), Rat(-9, 100)},
        {Rat(-30, 100), Rat(-81, 100)}, {Rat(49, 100), Rat(-72, 100)}};
    for (int i = 0; i < k; ++i) pts.emplace_back(dirs[static_cast<std::size_t>(i)].first,
                                                 dirs[static_cast<std::size_t>(i)].second);
    return pts;
}

}  // namespace

TEST_CASE("nearest lower neighbor") {
    SUBCASE("euclidean nearest wins") {
        // source, two level-1 candidates, the queried vertex at level 2
        Fixture f({{0, 0}, {Rat(9, 10), 0}, {Rat(7, 10), Rat(1, 10)}, {Rat(3, 2), 0}});
        LevelStructure ls = bfs_levels(f.g, 0);
        REQUIRE(ls.level(3) == 2);
        CHECK(nearest_lower_neighbor(f.g, ls, 3) == 1);  // 0.6 beats ~0.806
    }
    SUBCASE("single candidate") {
        Fixture f({{0, 0}, {Rat(9, 10), 0}, {Rat(17, 10), Rat(1, 10)}});
        LevelStructure ls = bfs_levels(f.g, 0);
        REQUIRE(ls.level(2) == 2);
        CHECK(nearest_lower_neighbor(f.g, ls, 2) == 1);
    }
    SUBCASE("equidistant candidates break to the smaller index") {
        // two level-1 vertices symmetric about the x axis
        Fixture f({{0, 0},
                   {Rat(9, 10), Rat(3, 10)},
                   {Rat(9, 10), Rat(-3, 10)},
                   {Rat(9, 5), 0}});
        LevelStructure ls = bfs_levels(f.g, 0);
        REQUIRE(ls.level(3) == 2);
        CHECK(sq_dist(f.pts[3], f.pts[1]) == sq_dist(f.pts[3], f.pts[2]));
        CHECK(nearest_lower_neighbor(f.g, ls, 3) == 1);
    }
    SUBCASE("level 0 rejected") {
        Fixture f({{0, 0}, {Rat(9, 10), 0}, {0, 1}});
        LevelStructure ls = bfs_levels(f.g, 0);
        CHECK_THROWS_AS(nearest_lower_neighbor(f.g, ls, 0), std::invalid_argument);
    }
}

TEST_CASE("delaunay_path examples and properties") {
    Fixture f({{0, 0}, {1, 0}, {Rat(1, 2), Rat(1, 10)}});
    CHECK(delaunay_path(f.tri, 0, 1) == std::vector<int>{0, 2, 1});
    // two-cell case
    Fixture f2({{0, 0}, {1, 0}, {0, 1}});
    CHECK(delaunay_path(f2.tri, 0, 1) == std::vector<int>{0, 1});
    // precondition |u - w| <= 1
    Fixture f3({{0, 0}, {2, 0}, {1, 1}});
    CHECK_THROWS_AS(delaunay_path(f3.tri, 0, 1), std::invalid_argument);

    // endpoint-anchored monotonicity on random walks
    for (std::uint64_t seed : {4ULL, 14ULL}) {
        Instance inst = generate_instance(GenKind::Uniform, 50, {}, seed);
        UnitDiskGraph g = UnitDiskGraph::build(inst.points);
        Triangulation tri = build_delaunay(inst.points);
        LevelStructure ls = bfs_levels(g, 0);
        for (int u = 0; u < g.size(); ++u) {
            if (ls.level(u) < 1) continue;
            int w = nearest_lower_neighbor(g, ls, u);
            auto p = delaunay_path(tri, u, w);  // asserts the properties itself
            DelaunaySegment seg{u, w, p};
            CHECK(check_dd_properties(seg, inst.points).pass);
        }
    }
}

TEST_CASE("star instance: every path is the two-vertex segment") {
    auto pts = star_points(6);
    UnitDiskGraph g = UnitDiskGraph::build(pts);
    Triangulation tri = build_delaunay(pts);
    PathSystem ps = build_path_system(g, tri, 0);
    for (int u = 1; u <= 6; ++u) {
        auto m = materialize_path(ps, u);
        CHECK(m == std::vector<int>{u, 0});
        CHECK(ps.records[static_cast<std::size_t>(u)].anchors == std::vector<int>{u, 0});
        CHECK_FALSE(ps.records[static_cast<std::size_t>(u)].continuation.has_value());
    }
    CHECK(materialize_path(ps, 0) == std::vector<int>{0});
}

TEST_CASE("jittered line: chains run down the whole line") {
    Instance inst = generate_instance(GenKind::LineJitter, 8, {}, 3);
    UnitDiskGraph g = UnitDiskGraph::build(inst.points);
    Triangulation tri = build_delaunay(inst.points);
    PathSystem ps = build_path_system(g, tri, 0);
    // vertex k sits at level k; its path visits k+1 vertices
    for (int u = 0; u < 8; ++u) {
        auto m = materialize_path(ps, u);
        CHECK(static_cast<int>(m.size()) == u + 1);
        CHECK(m.front() == u);
        CHECK(m.back() == 0);
        CHECK(check_pseudo_shortest(g, m, ps.records[static_cast<std::size_t>(u)].anchors, 0)
                  .pass);
    }
    CHECK(check_noncrossing_system(ps, g).pass);
}

TEST_CASE("path system invariants on random instances") {
    for (std::uint64_t seed : {6ULL, 16ULL, 26ULL}) {
        Instance inst = generate_instance(GenKind::Uniform, 60, {}, seed);
        SeparatorOptions opts;
        UnitDiskGraph g = UnitDiskGraph::build(inst.points);
        // restrict to the component of the smallest vertex
        LevelStructure ls0 = bfs_levels(g, 0);
        std::vector<Point> comp_pts;
        std::vector<int> keep;
        for (int v = 0; v < g.size(); ++v)
            if (ls0.level(v) != kUnreachable) {
                keep.push_back(v);
                comp_pts.push_back(inst.points[static_cast<std::size_t>(v)]);
            }
        if (comp_pts.size() < 3) continue;
        UnitDiskGraph lg = UnitDiskGraph::build(comp_pts);
        Triangulation tri = build_delaunay(comp_pts);
        PathSystem ps = build_path_system(lg, tri, 0);

        CHECK(check_path_system(ps, lg, tri).pass);
        CHECK(check_noncrossing_system(ps, lg).pass);
        for (int u = 0; u < lg.size(); ++u) {
            auto m = materialize_path(ps, u);
            CHECK(check_pseudo_shortest(
                      lg, m, ps.records[static_cast<std::size_t>(u)].anchors, 0)
                      .pass);
        }

        // pairwise non-crossing of the raw Delaunay segments
        std::vector<std::vector<Point>> seg_chains;
        for (int u = 0; u < lg.size(); ++u) {
            const auto& rec = ps.records[static_cast<std::size_t>(u)];
            if (!rec.segment || rec.segment->vertices.size() < 2) continue;
            std::vector<Point> c;
            for (int v : rec.segment->vertices) c.push_back(lg.point(v));
            seg_chains.push_back(std::move(c));
        }
        CHECK(check_noncrossing_chains(seg_chains).pass);
    }
}

namespace {

// independent recursive expansion of the compact records
std::vector<int> expand_recursive(const PathSystem& ps, int u) {
    const PathRecord& rec = ps.records[static_cast<std::size_t>(u)];
    if (!rec.segment) return {u};
    if (!rec.continuation) return rec.segment->vertices;
    std::vector<int> tail = expand_recursive(ps, rec.continuation->path);
    auto it = std::find(tail.begin(), tail.end(), rec.continuation->junction);
    REQUIRE(it != tail.end());
    std::vector<int> out = rec.segment->vertices;
    out.insert(out.end(), it + 1, tail.end());
    return out;
}

}  // namespace

TEST_CASE("materialize matches an independent recursive expansion") {
    Instance inst = generate_instance(GenKind::GridJitter, 36, {}, 8);
    UnitDiskGraph g = UnitDiskGraph::build(inst.points);
    Triangulation tri = build_delaunay(inst.points);
    PathSystem ps = build_path_system(g, tri, 0);
    for (int u = 0; u < g.size(); ++u)
        CHECK(materialize_path(ps, u) == expand_recursive(ps, u));
}

TEST_CASE("path anchors") {
    Instance inst = generate_instance(GenKind::GridJitter, 25, {}, 4);
    UnitDiskGraph g = UnitDiskGraph::build(inst.points);
    Triangulation tri = build_delaunay(inst.points);
    PathSystem ps = build_path_system(g, tri, 0);
    LevelStructure ls = bfs_levels(g, 0);

    for (int u = 0; u < g.size(); ++u) {
        auto mat = materialize_path(ps, u);
        // full list from the origin, [s] at the source
        CHECK(path_anchors(ps, u, u) == ps.records[static_cast<std::size_t>(u)].anchors);
        CHECK(path_anchors(ps, u, 0) == std::vector<int>{0});
        for (int x : mat) {
            auto sp = path_anchors(ps, u, x);
            REQUIRE(!sp.empty());
            CHECK(sp.front() == x);
            CHECK(sp.back() == 0);
            for (std::size_t i = 0; i + 1 < sp.size(); ++i) {
                CHECK(g.adjacent(sp[i], sp[i + 1]));
                CHECK(ls.level(sp[i]) == ls.level(sp[i + 1]) + 1);
            }
        }
    }
    // a vertex off the path is rejected
    auto mat1 = materialize_path(ps, 1);
    for (int x = 0; x < g.size(); ++x) {
        if (std::find(mat1.begin(), mat1.end(), x) == mat1.end()) {
            CHECK_THROWS_AS(path_anchors(ps, 1, x), std::invalid_argument);
            break;
        }
    }
}

TEST_CASE("unreachable vertices rejected") {
    std::vector<Point> pts{{0, 0}, {Rat(1, 2), 0}, {0, Rat(1, 2)}, {5, 5}};
    UnitDiskGraph g = UnitDiskGraph::build(pts);
    Triangulation tri = build_delaunay(pts);
    CHECK_THROWS_AS(build_path_system(g, tri, 0), std::invalid_argument);
}
