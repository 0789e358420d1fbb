#include "udgsep/geom.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace udgsep {

Segment::Segment(Point pa, Point pb) : a(std::move(pa)), b(std::move(pb)) {
    if (a == b) throw std::invalid_argument("zero-length segment");
}

Chain::Chain(std::vector<Point> vs) : vertices(std::move(vs)) {
    if (vertices.size() < 2) throw std::invalid_argument("chain needs >= 2 vertices");
    for (std::size_t i = 1; i < vertices.size(); ++i)
        if (vertices[i] == vertices[i - 1])
            throw std::invalid_argument("chain has repeated consecutive vertex");
    for (std::size_t i = 2; i < vertices.size(); ++i)
        if (vertices[i] == vertices[i - 2])
            throw std::invalid_argument("chain has a spur");
}

int orient(const Point& p, const Point& q, const Point& r) {
    Rat det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return sgn(det);
}

int incircle(const Point& a, const Point& b, const Point& c, const Point& d) {
    int ori = orient(a, b, c);
    if (ori == 0) throw std::invalid_argument("incircle: collinear triangle");

    Rat ax = a.x - d.x, ay = a.y - d.y;
    Rat bx = b.x - d.x, by = b.y - d.y;
    Rat cx = c.x - d.x, cy = c.y - d.y;
    Rat a2 = ax * ax + ay * ay;
    Rat b2 = bx * bx + by * by;
    Rat c2 = cx * cx + cy * cy;
    Rat det = ax * (by * c2 - b2 * cy) - ay * (bx * c2 - b2 * cx) + a2 * (bx * cy - by * cx);
    return sgn(det) * ori;
}

Rat sq_dist(const Point& a, const Point& b) {
    Rat dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
    if (orient(a, b, p) != 0) return false;
    Rat d = (p.x - a.x) * (b.x - p.x) + (p.y - a.y) * (b.y - p.y);
    return sgn(d) >= 0;
}

Rat seg_point_sqdist(const Point& a, const Point& b, const Point& p) {
    Rat abx = b.x - a.x, aby = b.y - a.y;
    Rat apx = p.x - a.x, apy = p.y - a.y;
    Rat t_num = apx * abx + apy * aby;
    if (sgn(t_num) <= 0) return sq_dist(a, p);
    Rat len2 = abx * abx + aby * aby;
    if (t_num >= len2) return sq_dist(b, p);
    Rat cross = abx * apy - aby * apx;
    return cross * cross / len2;
}

namespace {

// p strictly between a and b; all three collinear assumed.
bool strictly_between(const Point& a, const Point& b, const Point& p) {
    Rat d = (p.x - a.x) * (b.x - p.x) + (p.y - a.y) * (b.y - p.y);
    return sgn(d) > 0;
}

}  // namespace

bool segments_cross(const Segment& s1, const Segment& s2) {
    const Point &p = s1.a, &q = s1.b, &r = s2.a, &s = s2.b;
    int o1 = orient(p, q, r);
    int o2 = orient(p, q, s);
    int o3 = orient(r, s, p);
    int o4 = orient(r, s, q);

    if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
        // Same supporting line. Crossing iff the open overlap is nonempty.
        bool use_x = p.x != q.x;
        auto coord = [&](const Point& pt) { return use_x ? pt.x : pt.y; };
        Rat lo1 = std::min(coord(p), coord(q)), hi1 = std::max(coord(p), coord(q));
        Rat lo2 = std::min(coord(r), coord(s)), hi2 = std::max(coord(r), coord(s));
        return std::max(lo1, lo2) < std::min(hi1, hi2);
    }

    if (o1 * o2 < 0 && o3 * o4 < 0) return true;

    // An endpoint of one segment in the interior of the other crosses; a
    // shared endpoint alone does not.
    if (o1 == 0 && strictly_between(p, q, r)) return true;
    if (o2 == 0 && strictly_between(p, q, s)) return true;
    if (o3 == 0 && strictly_between(r, s, p)) return true;
    if (o4 == 0 && strictly_between(r, s, q)) return true;
    return false;
}

namespace {

// Same positive direction from the center.
bool same_direction(const Point& u, const Point& v) {
    Rat cross = u.x * v.y - u.y * v.x;
    if (sgn(cross) != 0) return false;
    Rat dot = u.x * v.x + u.y * v.y;
    return sgn(dot) > 0;
}

// Angular class of direction d measured counterclockwise from reference a:
// 0 for (0, pi), 1 for exactly pi, 2 for (pi, 2 pi). Same-direction pairs
// are excluded by the caller.
int half_class(const Point& a, const Point& d) {
    Rat cross = a.x * d.y - a.y * d.x;
    int cs = sgn(cross);
    if (cs > 0) return 0;
    if (cs < 0) return 2;
    return 1;
}

}  // namespace

CyclicOrder cyclic_compare(const Point& center, const Point& a, const Point& b,
                           const Point& c) {
    Point da{a.x - center.x, a.y - center.y};
    Point db{b.x - center.x, b.y - center.y};
    Point dc{c.x - center.x, c.y - center.y};
    if ((sgn(da.x) == 0 && sgn(da.y) == 0) || (sgn(db.x) == 0 && sgn(db.y) == 0) ||
        (sgn(dc.x) == 0 && sgn(dc.y) == 0))
        throw std::invalid_argument("cyclic_compare: point equals center");

    if (same_direction(da, db) || same_direction(da, dc) || same_direction(db, dc))
        return CyclicOrder::Degenerate;

    int hb = half_class(da, db);
    int hc = half_class(da, dc);
    bool b_first;
    if (hb != hc) {
        b_first = hb < hc;
    } else {
        // same open half-plane relative to a: compare directly
        Rat cross = db.x * dc.y - db.y * dc.x;
        b_first = sgn(cross) > 0;
    }
    return b_first ? CyclicOrder::CCW : CyclicOrder::CW;
}

namespace {

struct SharedRun {
    int p_lo, p_hi;  // inclusive indices into P
    int q_at_plo;    // aligned q index at p_lo
    int step;        // +1 or -1 along Q as P ascends; 0 for singleton
};

std::vector<SharedRun> find_runs(const std::vector<Point>& P, const std::map<Point, int>& qidx) {
    std::vector<SharedRun> runs;
    const int np = static_cast<int>(P.size());
    int i = 0;
    while (i < np) {
        auto it = qidx.find(P[i]);
        if (it == qidx.end()) {
            ++i;
            continue;
        }
        int j = it->second;
        int step = 0;
        // choose a direction by the next vertex, if it continues the run
        if (i + 1 < np) {
            auto nx = qidx.find(P[i + 1]);
            if (nx != qidx.end()) {
                if (nx->second == j + 1) step = 1;
                else if (nx->second == j - 1) step = -1;
            }
        }
        int hi = i;
        if (step != 0) {
            int qj = j;
            while (hi + 1 < np) {
                auto nx = qidx.find(P[hi + 1]);
                if (nx == qidx.end() || nx->second != qj + step) break;
                ++hi;
                qj += step;
            }
        }
        runs.push_back({i, hi, j, step});
        i = hi + 1;
    }
    return runs;
}

}  // namespace

CrossReport chains_cross(const Chain& pc, const Chain& qc) {
    const auto& P = pc.vertices;
    const auto& Q = qc.vertices;
    {
        std::set<Point> sp(P.begin(), P.end());
        if (sp.size() != P.size()) throw std::invalid_argument("chain P repeats a vertex");
        std::set<Point> sq(Q.begin(), Q.end());
        if (sq.size() != Q.size()) throw std::invalid_argument("chain Q repeats a vertex");
    }
    const int np = static_cast<int>(P.size());
    const int nq = static_cast<int>(Q.size());

    std::map<Point, int> qidx;
    for (int j = 0; j < nq; ++j) qidx.emplace(Q[j], j);

    // Forward/backward crossings through maximal shared runs. A run touching
    // a chain endpoint on either side cannot cross there.
    auto run_crossing = [&](const SharedRun& run, int step) -> std::optional<CrossReport> {
        int j_lo = run.q_at_plo;                              // aligned with p_lo
        int j_hi = run.q_at_plo + step * (run.p_hi - run.p_lo);  // aligned with p_hi
        int pb = run.p_lo - 1, pa = run.p_hi + 1;
        int qb = j_lo - step, qa = j_hi + step;
        if (pb < 0 || pa >= np || qb < 0 || qb >= nq || qa < 0 || qa >= nq)
            return std::nullopt;
        const Point& v_start = P[run.p_lo];
        const Point& v_end = P[run.p_hi];
        const Point& next_of_start = P[run.p_lo + 1];  // run vertex or P-after
        const Point& prev_of_end = P[run.p_hi - 1];
        CyclicOrder c1 = cyclic_compare(v_start, P[pb], Q[qb], next_of_start);
        CyclicOrder c2 = cyclic_compare(v_end, P[pa], Q[qa], prev_of_end);
        if (c1 == CyclicOrder::Degenerate || c2 == CyclicOrder::Degenerate)
            return std::nullopt;
        if (c1 != c2) return std::nullopt;
        CrossReport rep;
        rep.kind = step > 0 ? CrossKind::Forward : CrossKind::Backward;
        rep.witness = CrossWitness{run.p_lo, run.p_hi, std::min(j_lo, j_hi), std::max(j_lo, j_hi)};
        return rep;
    };

    for (const SharedRun& run : find_runs(P, qidx)) {
        if (run.step != 0) {
            if (auto rep = run_crossing(run, run.step)) return *rep;
        } else {
            if (auto rep = run_crossing(run, +1)) return *rep;
            if (auto rep = run_crossing(run, -1)) return *rep;
        }
    }

    // Plain edge crossings. Identical edges belong to a shared run and are
    // handled above.
    for (int i = 0; i + 1 < np; ++i) {
        for (int j = 0; j + 1 < nq; ++j) {
            bool same_edge = (P[i] == Q[j] && P[i + 1] == Q[j + 1]) ||
                             (P[i] == Q[j + 1] && P[i + 1] == Q[j]);
            if (same_edge) continue;
            if (segments_cross(Segment(P[i], P[i + 1]), Segment(Q[j], Q[j + 1]))) {
                CrossReport rep;
                rep.kind = CrossKind::Simple;
                rep.witness = CrossWitness{i, i + 1, j, j + 1};
                return rep;
            }
        }
    }
    return {};
}

}  // namespace udgsep
