#pragma once

// Exact geometric predicates and polygonal-chain crossing detection.
// Everything here is pure and exact: signs are decided in rational
// arithmetic, never with an epsilon.

#include <optional>
#include <vector>

#include "udgsep/rational.hpp"

namespace udgsep {

struct Point {
    Rat x, y;

    Point() : x(0), y(0) {}
    // gmp rational arithmetic assumes canonical operands; normalizing here
    // makes hand-written fractions safe everywhere downstream
    Point(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {
        x.canonicalize();
        y.canonicalize();
    }
    Point(int px, int py) : x(px), y(py) {}

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
    bool operator<(const Point& o) const {
        int c = cmp(x, o.x);
        if (c != 0) return c < 0;
        return cmp(y, o.y) < 0;
    }
};

/// Closed straight segment with distinct endpoints.
struct Segment {
    Point a, b;
    Segment(Point pa, Point pb);
};

/// Simple polygonal chain: >= 2 vertices, consecutive vertices distinct,
/// no spur (v[i-1] != v[i+1]).
struct Chain {
    std::vector<Point> vertices;
    explicit Chain(std::vector<Point> vs);
};

enum class CrossKind { None, Simple, Forward, Backward };

/// Location of a detected crossing: inclusive vertex-index ranges into the
/// two chains. For Simple crossings the ranges span the two crossing edges.
struct CrossWitness {
    int p_lo = 0, p_hi = 0;
    int q_lo = 0, q_hi = 0;
};

struct CrossReport {
    CrossKind kind = CrossKind::None;
    std::optional<CrossWitness> witness;
};

/// Sign of the signed area of (p, q, r): +1 when r lies strictly left of the
/// directed line p->q, -1 strictly right, 0 collinear.
int orient(const Point& p, const Point& q, const Point& r);

/// +1 when d is strictly inside the circumcircle of the triangle (a, b, c)
/// taken with counterclockwise orientation, -1 strictly outside, 0 on it.
/// Throws std::invalid_argument when a, b, c are collinear.
int incircle(const Point& a, const Point& b, const Point& c, const Point& d);

/// True when the segments share a point that is interior to at least one of
/// them. Touching only at a common endpoint does not count; an endpoint of
/// one segment lying in the interior of the other does.
bool segments_cross(const Segment& s1, const Segment& s2);

enum class CyclicOrder { CW, CCW, Degenerate };

/// Rotational order of the directions center->a, center->b, center->c.
/// Degenerate when two of the directions coincide (a, b, c must differ from
/// center).
CyclicOrder cyclic_compare(const Point& center, const Point& a, const Point& b,
                           const Point& c);

/// Full chain-crossing test: edge/edge crossings plus forward and backward
/// crossings through maximal shared vertex runs. Chains must be simple
/// (throws std::invalid_argument on repeated vertices).
CrossReport chains_cross(const Chain& p, const Chain& q);

// Small exact helpers shared by the modules above this one.

Rat sq_dist(const Point& a, const Point& b);

/// Squared distance from point p to the closed segment [a, b].
Rat seg_point_sqdist(const Point& a, const Point& b, const Point& p);

/// True when p lies on the closed segment [a, b].
bool on_segment(const Point& a, const Point& b, const Point& p);

}  // namespace udgsep
