#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "udgsep/errors.hpp"
#include "udgsep/instance.hpp"
#include "udgsep/udg.hpp"

using namespace udgsep;

TEST_CASE("threshold adjacency") {
    // distances 0.5, 1.1, 1.6: only the first pair is adjacent
    UnitDiskGraph g = UnitDiskGraph::build(
        {{0, 0}, {Rat(1, 2), 0}, {Rat(8, 5), 0}});
    CHECK(g.adjacent(0, 1));
    CHECK_FALSE(g.adjacent(1, 2));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.edge_count() == 1);
}

TEST_CASE("boundary case |p-q| = 1") {
    std::vector<Point> pts{{0, 0}, {1, 0}};
    UnitDiskGraph g = UnitDiskGraph::build(pts);
    CHECK(g.adjacent(0, 1));
    UnitDiskGraph strict = UnitDiskGraph::build(pts, true);
    CHECK_FALSE(strict.adjacent(0, 1));
}

TEST_CASE("points in a small disk form a clique") {
    Instance inst = generate_instance(GenKind::Clique, 12, {}, 5);
    UnitDiskGraph g = UnitDiskGraph::build(inst.points);
    CHECK(g.edge_count() == 12 * 11 / 2);
}

TEST_CASE("duplicate points rejected") {
    CHECK_THROWS_AS(UnitDiskGraph::build({{0, 0}, {0, 0}}), degenerate_error);
}

TEST_CASE("bfs levels") {
    SUBCASE("path graph") {
        UnitDiskGraph g = UnitDiskGraph::build({{0, 0}, {Rat(9, 10), 0}, {Rat(9, 5), 0}});
        LevelStructure ls = bfs_levels(g, 0);
        CHECK(ls.levels[0] == std::vector<int>{0});
        CHECK(ls.levels[1] == std::vector<int>{1});
        CHECK(ls.levels[2] == std::vector<int>{2});
    }
    SUBCASE("complete graph") {
        Instance inst = generate_instance(GenKind::Clique, 8, {}, 1);
        UnitDiskGraph g = UnitDiskGraph::build(inst.points);
        LevelStructure ls = bfs_levels(g, 3);
        CHECK(ls.levels[0] == std::vector<int>{3});
        CHECK(ls.levels[1].size() == 7);
    }
    SUBCASE("unreachable component") {
        UnitDiskGraph g = UnitDiskGraph::build({{0, 0}, {Rat(1, 2), 0}, {5, 5}});
        LevelStructure ls = bfs_levels(g, 0);
        CHECK(ls.level(2) == kUnreachable);
    }
    SUBCASE("edge levels differ by at most one") {
        Instance inst = generate_instance(GenKind::Uniform, 80, {}, 9);
        UnitDiskGraph g = UnitDiskGraph::build(inst.points);
        LevelStructure ls = bfs_levels(g, 0);
        for (int v = 0; v < g.size(); ++v) {
            for (int nb : g.neighbors(v)) {
                if (ls.level(v) == kUnreachable || ls.level(nb) == kUnreachable) continue;
                CHECK(std::abs(ls.level(v) - ls.level(nb)) <= 1);
            }
        }
    }
}

TEST_CASE("closed neighborhood") {
    UnitDiskGraph g = UnitDiskGraph::build({{0, 0}, {Rat(9, 10), 0}, {Rat(9, 5), 0}});
    CHECK(closed_neighborhood(g, {}).empty());
    CHECK(closed_neighborhood(g, {0, 1, 2}) == std::vector<int>{0, 1, 2});
    CHECK(closed_neighborhood(g, {1}) == std::vector<int>{0, 1, 2});
}

TEST_CASE("disk crossing adjacency examples") {
    UnitDiskGraph g =
        UnitDiskGraph::build({{0, 0}, {1, 0}, {Rat(1, 2), Rat(3, 10)}});
    CHECK(disk_crossing_adjacent(g, 0, 1, 2));
    CHECK_THROWS_AS(disk_crossing_adjacent(g, 0, 1, 0), std::invalid_argument);

    UnitDiskGraph g2 = UnitDiskGraph::build({{0, 0}, {Rat(1, 2), 0}, {Rat(2, 5), Rat(1, 10)}});
    CHECK(disk_crossing_adjacent(g2, 0, 1, 2));
}

TEST_CASE("disk crossing property: exhaustive with exact disk test") {
    // whenever the segment uv meets the radius-1/2 disk at x, x is adjacent
    // to u or v
    for (std::uint64_t seed : {2ULL, 12ULL}) {
        Instance inst = generate_instance(GenKind::Uniform, 30, {}, seed);
        UnitDiskGraph g = UnitDiskGraph::build(inst.points);
        const Rat quarter(1, 4);
        for (int u = 0; u < g.size(); ++u) {
            for (int v : g.neighbors(u)) {
                if (v < u) continue;
                for (int x = 0; x < g.size(); ++x) {
                    if (x == u || x == v) continue;
                    if (seg_point_sqdist(g.point(u), g.point(v), g.point(x)) <= quarter)
                        CHECK(disk_crossing_adjacent(g, u, v, x));
                }
            }
        }
    }
}

TEST_CASE("crominates examples") {
    SUBCASE("crossing with domination") {
        UnitDiskGraph g = UnitDiskGraph::build(
            {{0, 0}, {1, 0}, {Rat(1, 2), Rat(3, 10)}, {Rat(1, 2), Rat(-3, 10)}});
        CHECK(crominates(g, 0, 1, 2, 3));
    }
    SUBCASE("crossing without domination") {
        UnitDiskGraph g = UnitDiskGraph::build(
            {{0, 0}, {3, 0}, {Rat(3, 2), Rat(1, 10)}, {Rat(3, 2), Rat(-1, 10)}});
        CHECK_FALSE(g.adjacent(2, 0));
        CHECK_FALSE(g.adjacent(2, 1));
        CHECK_FALSE(g.adjacent(3, 0));
        CHECK_FALSE(g.adjacent(3, 1));
        CHECK_FALSE(crominates(g, 0, 1, 2, 3));
    }
    SUBCASE("non-crossing pair is vacuously true") {
        UnitDiskGraph g = UnitDiskGraph::build(
            {{0, 0}, {1, 0}, {5, 5}, {Rat(11, 2), 5}});
        CHECK(crominates(g, 0, 1, 2, 3));
    }
    SUBCASE("preconditions") {
        UnitDiskGraph g = UnitDiskGraph::build({{0, 0}, {1, 0}, {5, 5}, {Rat(11, 2), 5}});
        CHECK_THROWS_AS(crominates(g, 0, 1, 0, 2), std::invalid_argument);
        CHECK_THROWS_AS(crominates(g, 2, 3, 0, 2), std::invalid_argument);
    }
}
