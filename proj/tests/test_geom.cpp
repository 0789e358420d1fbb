#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>

#include "udgsep/geom.hpp"
#include "udgsep/instance.hpp"

using namespace udgsep;

TEST_CASE("orient signs") {
    CHECK(orient({0, 0}, {1, 0}, {0, 1}) == 1);
    CHECK(orient({0, 0}, {1, 0}, {2, 0}) == 0);
    CHECK(orient({0, 0}, {0, 1}, {1, 0}) == -1);
}

TEST_CASE("orient antisymmetry") {
    Rng rng(99);
    for (int it = 0; it < 2000; ++it) {
        Point p(static_cast<int>(rng.below(21)) - 10, static_cast<int>(rng.below(21)) - 10);
        Point q(static_cast<int>(rng.below(21)) - 10, static_cast<int>(rng.below(21)) - 10);
        Point r(static_cast<int>(rng.below(21)) - 10, static_cast<int>(rng.below(21)) - 10);
        CHECK(orient(p, q, r) == -orient(q, p, r));
    }
}

TEST_CASE("incircle examples") {
    CHECK(incircle({0, 0}, {1, 0}, {0, 1}, {Rat(1, 4), Rat(1, 4)}) == 1);
    CHECK(incircle({0, 0}, {1, 0}, {0, 1}, {1, 1}) == 0);  // cocircular square corners
    CHECK(incircle({0, 0}, {1, 0}, {0, 1}, {5, 5}) == -1);
    CHECK_THROWS_AS(incircle({0, 0}, {1, 0}, {2, 0}, {0, 1}), std::invalid_argument);
}

TEST_CASE("incircle invariant under cyclic rotation") {
    Rng rng(7);
    auto rnd = [&]() {
        return Point(static_cast<int>(rng.below(19)) - 9, static_cast<int>(rng.below(19)) - 9);
    };
    int done = 0;
    while (done < 500) {
        Point a = rnd(), b = rnd(), c = rnd(), d = rnd();
        if (orient(a, b, c) == 0) continue;
        CHECK(incircle(a, b, c, d) == incircle(b, c, a, d));
        CHECK(incircle(a, b, c, d) == incircle(c, a, b, d));
        ++done;
    }
}

TEST_CASE("segment construction rejects zero length") {
    CHECK_THROWS_AS(Segment({1, 1}, {1, 1}), std::invalid_argument);
}

TEST_CASE("segments_cross examples") {
    CHECK(segments_cross(Segment({0, 0}, {1, 1}), Segment({0, 1}, {1, 0})));
    CHECK_FALSE(segments_cross(Segment({0, 0}, {1, 0}), Segment({1, 0}, {2, 0})));
    // T junction: interior of one, endpoint of the other
    CHECK(segments_cross(Segment({0, 0}, {2, 0}), Segment({1, 0}, {1, 1})));
    // collinear overlap, touch, identity
    CHECK(segments_cross(Segment({0, 0}, {2, 0}), Segment({1, 0}, {3, 0})));
    CHECK_FALSE(segments_cross(Segment({0, 0}, {1, 0}), Segment({1, 0}, {3, 0})));
    CHECK(segments_cross(Segment({0, 0}, {1, 0}), Segment({0, 0}, {1, 0})));
    // shared endpoint, transversal
    CHECK_FALSE(segments_cross(Segment({0, 0}, {1, 1}), Segment({0, 0}, {1, 0})));
}

namespace {

// Independent rational-arithmetic intersection test: solve for the
// intersection parameters directly.
bool segments_cross_oracle(const Point& p, const Point& q, const Point& r, const Point& s) {
    Rat dpx = q.x - p.x, dpy = q.y - p.y;
    Rat drx = s.x - r.x, dry = s.y - r.y;
    Rat den = dpx * dry - dpy * drx;
    if (sgn(den) != 0) {
        Rat t = ((r.x - p.x) * dry - (r.y - p.y) * drx) / den;
        Rat u = ((r.x - p.x) * dpy - (r.y - p.y) * dpx) / den;
        if (t < 0 || t > 1 || u < 0 || u > 1) return false;
        bool interior_p = t > 0 && t < 1;
        bool interior_r = u > 0 && u < 1;
        return interior_p || interior_r;
    }
    // parallel: must be collinear to share anything
    if (orient(p, q, r) != 0) return false;
    // project onto the dominant axis and intersect open intervals
    bool use_x = p.x != q.x;
    auto c = [&](const Point& pt) { return use_x ? pt.x : pt.y; };
    Rat lo1 = std::min(c(p), c(q)), hi1 = std::max(c(p), c(q));
    Rat lo2 = std::min(c(r), c(s)), hi2 = std::max(c(r), c(s));
    return std::max(lo1, lo2) < std::min(hi1, hi2);
}

}  // namespace

TEST_CASE("segments_cross agrees with the rational oracle on random pairs") {
    Rng rng(2024);
    auto rnd = [&]() {
        return Point(static_cast<int>(rng.below(11)) - 5, static_cast<int>(rng.below(11)) - 5);
    };
    int done = 0;
    while (done < 10000) {
        Point p = rnd(), q = rnd(), r = rnd(), s = rnd();
        if (p == q || r == s) continue;
        CHECK(segments_cross(Segment(p, q), Segment(r, s)) ==
              segments_cross_oracle(p, q, r, s));
        ++done;
    }
}

TEST_CASE("cyclic_compare examples") {
    CHECK(cyclic_compare({0, 0}, {1, 0}, {0, 1}, {-1, 0}) == CyclicOrder::CCW);
    CHECK(cyclic_compare({0, 0}, {1, 0}, {0, -1}, {-1, 0}) == CyclicOrder::CW);
    CHECK(cyclic_compare({0, 0}, {1, 0}, {2, 0}, {0, 1}) == CyclicOrder::Degenerate);
    CHECK_THROWS_AS(cyclic_compare({0, 0}, {0, 0}, {1, 0}, {0, 1}), std::invalid_argument);
}

TEST_CASE("chain validation") {
    CHECK_THROWS_AS(Chain({{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Chain({{0, 0}, {0, 0}}), std::invalid_argument);
    // spur: v[i-1] == v[i+1]
    CHECK_THROWS_AS(Chain({{0, 0}, {1, 0}, {0, 0}}), std::invalid_argument);
    // repeated (non-consecutive) vertices rejected by chains_cross
    Chain ok({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 2}});
    Chain closed({{5, 5}, {6, 5}, {6, 6}, {5, 6}, {5, 5}});  // no spur, repeats its start
    CHECK_THROWS_AS(chains_cross(ok, closed), std::invalid_argument);
}

TEST_CASE("chains_cross shared-run examples") {
    Chain p({{0, 1}, {1, 0}, {2, 0}, {3, 1}});
    Chain q_none({{0, -1}, {1, 0}, {2, 0}, {3, -1}});
    Chain q_fwd({{0, -1}, {1, 0}, {2, 0}, {Rat(3), Rat(3, 2)}});

    // oracle: evaluate the two cyclic-order conditions at the run ends
    auto run_condition = [](const Chain& P, const Chain& Q) {
        const auto& pv = P.vertices;
        const auto& qv = Q.vertices;
        CyclicOrder c1 = cyclic_compare(pv[1], pv[0], qv[0], pv[2]);
        CyclicOrder c2 = cyclic_compare(pv[2], pv[3], qv[3], pv[1]);
        return c1 != CyclicOrder::Degenerate && c1 == c2;
    };
    CHECK_FALSE(run_condition(p, q_none));
    CHECK(run_condition(p, q_fwd));

    CHECK(chains_cross(p, q_none).kind == CrossKind::None);
    auto fwd = chains_cross(p, q_fwd);
    CHECK(fwd.kind == CrossKind::Forward);
    REQUIRE(fwd.witness.has_value());
    CHECK(fwd.witness->p_lo == 1);
    CHECK(fwd.witness->p_hi == 2);
    CHECK(fwd.witness->q_lo == 1);
    CHECK(fwd.witness->q_hi == 2);

    auto simple = chains_cross(Chain({{0, 0}, {1, 1}}), Chain({{0, 1}, {1, 0}}));
    CHECK(simple.kind == CrossKind::Simple);
}

TEST_CASE("chains_cross symmetry and reversal") {
    Chain p({{0, 1}, {1, 0}, {2, 0}, {3, 1}});
    Chain q({{0, -1}, {1, 0}, {2, 0}, {Rat(3), Rat(3, 2)}});
    auto pq = chains_cross(p, q);
    auto qp = chains_cross(q, p);
    CHECK(pq.kind == CrossKind::Forward);
    CHECK(qp.kind == CrossKind::Forward);

    std::vector<Point> rev = q.vertices;
    std::reverse(rev.begin(), rev.end());
    auto prev_ = chains_cross(p, Chain(rev));
    CHECK(prev_.kind == CrossKind::Backward);
    REQUIRE(prev_.witness.has_value());
    // same run, indices mirrored through the reversal
    CHECK(prev_.witness->p_lo == pq.witness->p_lo);
    CHECK(prev_.witness->p_hi == pq.witness->p_hi);
    int nq = static_cast<int>(q.vertices.size());
    CHECK(prev_.witness->q_lo == nq - 1 - pq.witness->q_hi);
    CHECK(prev_.witness->q_hi == nq - 1 - pq.witness->q_lo);
}

TEST_CASE("single shared vertex crossing") {
    Chain p({{-1, 0}, {0, 0}, {1, 0}});
    Chain q_cross({{0, -1}, {0, 0}, {0, 1}});
    Chain q_touch({{0, -1}, {0, 0}, {1, -1}});
    CHECK(chains_cross(p, q_cross).kind == CrossKind::Forward);
    CHECK(chains_cross(p, q_touch).kind == CrossKind::None);
}

TEST_CASE("point segment distance") {
    CHECK(seg_point_sqdist({0, 0}, {2, 0}, {1, 1}) == Rat(1));
    CHECK(seg_point_sqdist({0, 0}, {2, 0}, {3, 0}) == Rat(1));
    CHECK(seg_point_sqdist({0, 0}, {2, 0}, {1, 0}) == Rat(0));
    CHECK(on_segment({0, 0}, {2, 0}, {1, 0}));
    CHECK_FALSE(on_segment({0, 0}, {2, 0}, {3, 0}));
}
