#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "udgsep/instance.hpp"
#include "udgsep/oracle.hpp"

using namespace udgsep;

TEST_CASE("separator balance check") {
    Instance inst = generate_instance(GenKind::GridJitter, 16, {}, 3);
    UnitDiskGraph g = UnitDiskGraph::build(inst.points);

    SUBCASE("removing everything passes with zero components") {
        std::vector<int> all;
        for (int v = 0; v < g.size(); ++v) all.push_back(v);
        auto rep = check_separator_balance(g, all);
        CHECK(rep.pass);
        CHECK(rep.counts[0].second == 0);
    }
    SUBCASE("removing nothing fails on a connected graph") {
        auto rep = check_separator_balance(g, {});
        CHECK_FALSE(rep.pass);
    }
}

TEST_CASE("pseudo shortest check") {
    UnitDiskGraph g = UnitDiskGraph::build(
        {{0, 0}, {Rat(9, 10), 0}, {Rat(9, 5), 0}, {Rat(9, 10), Rat(1, 2)}});
    SUBCASE("trivial source path") {
        CHECK(check_pseudo_shortest(g, {0}, {0}, 0).pass);
    }
    SUBCASE("one hop") {
        CHECK(check_pseudo_shortest(g, {1, 0}, {1, 0}, 0).pass);
    }
    SUBCASE("anchors skipping a level fail") {
        CHECK_FALSE(check_pseudo_shortest(g, {2, 1, 0}, {2, 0}, 0).pass);
    }
    SUBCASE("non-anchor vertex must touch an anchor") {
        // 3 is adjacent to 1; path [2,3,1,0]? 2-3 dist: (0.9,0.5) ok? Use a
        // valid wiggle: [2,1,0] with extra vertex 3 far from all anchors is
        // impossible to build here, so check the witness path directly
        auto rep = check_pseudo_shortest(g, {2, 3, 1, 0}, {2, 1, 0}, 0);
        CHECK(rep.pass == g.adjacent(3, 1));
    }
}

TEST_CASE("noncrossing chain check flags an injected forward crossing") {
    std::vector<std::vector<Point>> ok{
        {{0, 1}, {1, 0}, {2, 0}, {3, 1}},
        {{0, -1}, {1, 0 - 2}, {2, 0 - 2}, {3, -1}},
    };
    CHECK(check_noncrossing_chains(ok).pass);

    std::vector<std::vector<Point>> bad{
        {{0, 1}, {1, 0}, {2, 0}, {3, 1}},
        {{0, -1}, {1, 0}, {2, 0}, {Rat(3), Rat(3, 2)}},
    };
    auto rep = check_noncrossing_chains(bad);
    CHECK_FALSE(rep.pass);
    REQUIRE(!rep.witnesses.empty());
    CHECK(rep.witnesses[0].find("forward") != std::string::npos);
}

TEST_CASE("delaunay path properties check") {
    std::vector<Point> pts{{0, 0}, {1, 0}, {Rat(1, 2), Rat(1, 10)}};
    SUBCASE("a two-vertex segment passes vacuously") {
        DelaunaySegment seg{0, 1, {0, 1}};
        CHECK(check_dd_properties(seg, pts).pass);
    }
    SUBCASE("the walk through the middle cell passes") {
        DelaunaySegment seg{0, 1, {0, 2, 1}};
        CHECK(check_dd_properties(seg, pts).pass);
    }
    SUBCASE("a mutated segment fails monotonicity") {
        // reordering breaks the distances from the origin
        std::vector<Point> line{{0, 0}, {Rat(9, 10), 0}, {Rat(3, 10), 0}, {Rat(6, 10), 0}};
        DelaunaySegment seg{0, 1, {0, 3, 2, 1}};
        CHECK_FALSE(check_dd_properties(seg, line).pass);
    }
    SUBCASE("a far vertex fails the disk containment") {
        std::vector<Point> far{{0, 0}, {1, 0}, {Rat(1, 2), Rat(3, 5)}};
        DelaunaySegment seg{0, 1, {0, 2, 1}};
        CHECK_FALSE(check_dd_properties(seg, far).pass);
    }
}

TEST_CASE("crominating suite") {
    SUBCASE("random instances have zero violations") {
        for (std::uint64_t seed : {41ULL, 42ULL}) {
            Instance inst = generate_instance(GenKind::Uniform, 50, {}, seed);
            auto rep = check_crominating_all(inst.points);
            CHECK(rep.pass);
        }
    }
    SUBCASE("the non-dominated pair never appears as a Delaunay edge") {
        // the four-point arrangement where segment 0-1 crosses edge 2-3
        // without domination; 0-1 is not Delaunay there, so the suite passes
        std::vector<Point> pts{{0, 0}, {3, 0}, {Rat(3, 2), Rat(1, 10)}, {Rat(3, 2), Rat(-1, 10)}};
        Triangulation t = build_delaunay(pts);
        CHECK_FALSE(t.has_edge(0, 1));
        CHECK(check_crominating_all(pts).pass);
    }
    SUBCASE("clique instances pass") {
        Instance inst = generate_instance(GenKind::Clique, 20, {}, 5);
        CHECK(check_crominating_all(inst.points).pass);
    }
}

TEST_CASE("structure check rejects a tampered separator") {
    Instance inst = generate_instance(GenKind::GridJitter, 25, {}, 5);
    SeparatorResult r = compute_separator(inst.points);
    UnitDiskGraph g = UnitDiskGraph::build(inst.points);
    REQUIRE(check_separator_structure(g, r).pass);

    SeparatorResult tampered = r;
    tampered.separator_set.pop_back();
    CHECK_FALSE(check_separator_structure(g, tampered).pass);
}
