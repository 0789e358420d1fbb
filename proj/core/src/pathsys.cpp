#include "udgsep/pathsys.hpp"

#include <algorithm>
#include <unordered_map>

#include "udgsep/errors.hpp"

namespace udgsep {

int nearest_lower_neighbor(const UnitDiskGraph& g, const LevelStructure& levels, int u) {
    int a = levels.level(u);
    if (a < 1) throw std::invalid_argument("nearest_lower_neighbor: vertex at level < 1");
    const auto& cands = levels.levels[static_cast<std::size_t>(a - 1)];
    int best = -1;
    Rat best_d2;
    for (int v : cands) {
        Rat d2 = sq_dist(g.point(u), g.point(v));
        if (best == -1 || d2 < best_d2 || (d2 == best_d2 && v < best)) {
            best = v;
            best_d2 = d2;
        }
    }
    if (best == -1) throw internal_error("empty previous level");
    if (best_d2 > Rat(1)) throw internal_error("nearest lower neighbor beyond unit distance");
    return best;
}

std::vector<int> delaunay_path(const Triangulation& t, int u, int w) {
    if (sq_dist(t.site(u), t.site(w)) > Rat(1))
        throw std::invalid_argument("delaunay_path: endpoints farther than unit distance");
    std::vector<int> p = voronoi_segment_walk(t, u, w);

    // The three Delaunay-path properties hold for every such walk; a
    // violation means a predicate or walk bug. Distance monotonicity is
    // anchored at the endpoints: interior vertices do not admit the same
    // guarantee.
    const int len = static_cast<int>(p.size());
    const Point &pu = t.site(u), &pw = t.site(w);
    Rat diam2 = sq_dist(pu, pw);
    for (int i = 0; i < len; ++i) {
        const Point& pi = t.site(p[static_cast<std::size_t>(i)]);
        Rat cx = 2 * pi.x - pu.x - pw.x;
        Rat cy = 2 * pi.y - pu.y - pw.y;
        if (cx * cx + cy * cy > diam2)
            throw internal_error("delaunay_path: vertex outside the diameter disk");
        for (int j = i + 1; j < len; ++j) {
            if (sq_dist(pi, t.site(p[static_cast<std::size_t>(j)])) > Rat(1))
                throw internal_error("delaunay_path: pair beyond unit distance");
        }
    }
    for (int j = 1; j + 1 < len; ++j) {
        if (!(sq_dist(pu, t.site(p[static_cast<std::size_t>(j)])) <
              sq_dist(pu, t.site(p[static_cast<std::size_t>(j + 1)]))))
            throw internal_error("delaunay_path: distances from the origin not increasing");
        if (!(sq_dist(pw, t.site(p[static_cast<std::size_t>(len - 1 - j)])) <
              sq_dist(pw, t.site(p[static_cast<std::size_t>(len - 2 - j)]))))
            throw internal_error("delaunay_path: distances from the anchor not increasing");
    }
    return p;
}

namespace {

// ---------------------------------------------------------------------
// Strand bookkeeping during construction.
//
// A "corridor" is the ordered list of path strands across one Delaunay
// edge, stored CCW around the smaller endpoint. Around a vertex x, a
// strand occupies one lane slot per incident edge it uses; the circular
// sequence of all slots (edges in rotation order, lanes within an edge)
// describes a non-crossing chord diagram, which is exactly what a true
// epsilon-perturbation of the paths would produce.
// ---------------------------------------------------------------------

struct Builder {
    const UnitDiskGraph& g;
    const Triangulation& tri;
    std::map<std::pair<int, int>, std::vector<int>>& corridors;
    std::vector<std::vector<int>> routes;                  // per path id
    std::vector<std::unordered_map<int, int>> pos;         // vertex -> route index
    std::vector<std::unordered_map<int, int>> ring_pos;    // per vertex: neighbor -> rotation index

    Builder(const UnitDiskGraph& g_, const Triangulation& tri_,
            std::map<std::pair<int, int>, std::vector<int>>& cor)
        : g(g_), tri(tri_), corridors(cor) {
        const int n = g.size();
        routes.resize(static_cast<std::size_t>(n));
        pos.resize(static_cast<std::size_t>(n));
        ring_pos.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            const auto& ring = tri.rotation[static_cast<std::size_t>(v)];
            for (std::size_t k = 0; k < ring.size(); ++k)
                ring_pos[static_cast<std::size_t>(v)][ring[k]] = static_cast<int>(k);
        }
    }

    static std::pair<int, int> key(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

    std::vector<int>& lanes(int a, int b) { return corridors[key(a, b)]; }

    int view_index(int x, int other, int path) const {
        auto it = corridors.find(key(x, other));
        if (it == corridors.end()) throw internal_error("missing corridor");
        const auto& l = it->second;
        auto f = std::find(l.begin(), l.end(), path);
        if (f == l.end()) throw internal_error("strand missing from corridor");
        int stored = static_cast<int>(f - l.begin());
        return x <= other ? stored : static_cast<int>(l.size()) - 1 - stored;
    }

    void insert_at_view(int x, int other, int path, int view) {
        auto& l = lanes(x, other);
        int stored = x <= other ? view : static_cast<int>(l.size()) - view;
        l.insert(l.begin() + stored, path);
    }

    // Other-slot of a strand at x, given that it uses the corridor (x, n).
    struct Slot {
        bool start = false;  // the strand originates at x
        int edge_to = -1;    // neighbor on the strand's other incident edge
        int view = -1;       // its lane there, viewed from x
    };

    Slot other_slot(int m, int x, int n) const {
        const auto& r = routes[static_cast<std::size_t>(m)];
        int p = pos[static_cast<std::size_t>(m)].at(x);
        int len = static_cast<int>(r.size());
        if (p + 1 < len && r[static_cast<std::size_t>(p + 1)] == n) {
            if (p == 0) return {true, -1, -1};
            int z = r[static_cast<std::size_t>(p - 1)];
            return {false, z, view_index(x, z, m)};
        }
        if (p > 0 && r[static_cast<std::size_t>(p - 1)] == n) {
            if (p + 1 >= len) throw internal_error("strand ends away from the source");
            int z = r[static_cast<std::size_t>(p + 1)];
            return {false, z, view_index(x, z, m)};
        }
        throw internal_error("strand does not use the expected corridor");
    }

    // Backward comparator for two real slots at x, out-direction n: does a
    // get swept first when sweeping clockwise from the direction of n?
    bool swept_before(int x, int n, const Slot& a, const Slot& b) const {
        const auto& rp = ring_pos[static_cast<std::size_t>(x)];
        int deg = static_cast<int>(tri.rotation[static_cast<std::size_t>(x)].size());
        int in_ = rp.at(n);
        auto rank = [&](int z) { return (in_ - rp.at(z) + deg) % deg; };
        int ra = rank(a.edge_to), rb = rank(b.edge_to);
        if (ra != rb) return ra < rb;
        return a.view > b.view;
    }

    // Forward comparator: scan the two routes from x (both traverse x -> n)
    // until they diverge. Returns +1 when the new strand goes before the
    // member in the view from x, -1 after, 0 when no divergence is visible
    // (the member then counts as before).
    int forward_order(const std::vector<int>& sroute, int si, int m, int x, int n) const {
        const auto& mr = routes[static_cast<std::size_t>(m)];
        int p = pos[static_cast<std::size_t>(m)].at(x);
        int mlen = static_cast<int>(mr.size());
        int delta;
        if (p + 1 < mlen && mr[static_cast<std::size_t>(p + 1)] == n) delta = 1;
        else if (p > 0 && mr[static_cast<std::size_t>(p - 1)] == n) delta = -1;
        else throw internal_error("member does not traverse the corridor");

        int slen = static_cast<int>(sroute.size());
        int k = 1;
        for (;;) {
            int snext_i = si + k + 1;
            int mnext_i = p + delta * (k + 1);
            if (snext_i >= slen || mnext_i < 0 || mnext_i >= mlen) return 0;
            int snext = sroute[static_cast<std::size_t>(snext_i)];
            int mnext = mr[static_cast<std::size_t>(mnext_i)];
            if (snext == mnext) {
                ++k;
                continue;
            }
            int y = sroute[static_cast<std::size_t>(si + k)];
            int prev = sroute[static_cast<std::size_t>(si + k - 1)];
            CyclicOrder c = cyclic_compare(g.point(y), g.point(prev), g.point(snext), g.point(mnext));
            if (c == CyclicOrder::Degenerate)
                throw internal_error("degenerate divergence directions");
            return c == CyclicOrder::CCW ? +1 : -1;
        }
    }

    // Insert the strand of `path` into the corridor (x -> n). `sroute` is
    // the strand's route as known so far, `si` the index of x in it.
    void insert_lane(int path, const std::vector<int>& sroute, int si, int x, int n) {
        auto& l = lanes(x, n);
        Slot self;
        if (si == 0) {
            self.start = true;
        } else {
            int z = sroute[static_cast<std::size_t>(si - 1)];
            self = {false, z, view_index(x, z, path)};
        }
        // Decisive verdicts (backward keys for two pass-through strands,
        // forward divergence when an origin is involved) bound the insertion
        // position; forever-coincident strands are free and stay where the
        // position leaves them. Members are examined in the view order
        // from x, which is where the position lives.
        const int k = static_cast<int>(l.size());
        auto member_at_view = [&](int view) {
            return l[static_cast<std::size_t>(x <= n ? view : k - 1 - view)];
        };
        int last_before = -1;
        int first_after = k;
        for (int view = 0; view < k; ++view) {
            int m = member_at_view(view);
            Slot ms = other_slot(m, x, n);
            int verdict;  // +1 member first, -1 new strand first, 0 free
            if (!self.start && !ms.start) {
                verdict = swept_before(x, n, ms, self) ? +1 : -1;
            } else {
                verdict = -forward_order(sroute, si, m, x, n);
            }
            if (verdict > 0) last_before = view;
            else if (verdict < 0 && first_after == k)
                first_after = view;
        }
        if (last_before >= first_after)
            throw internal_error("inconsistent strand order at a vertex");
        insert_at_view(x, n, path, first_after);
    }

    // Circular slot sequence around w: (path, neighbor) per lane, edges in
    // rotation order, lanes viewed from w.
    struct CircleSlot {
        int path;
        int neighbor;
        int view;
    };

    std::vector<CircleSlot> circle(int w) const {
        std::vector<CircleSlot> out;
        for (int z : tri.rotation[static_cast<std::size_t>(w)]) {
            auto it = corridors.find(key(w, z));
            if (it == corridors.end()) continue;
            const auto& l = it->second;
            const int sz = static_cast<int>(l.size());
            for (int view = 0; view < sz; ++view) {
                int stored = w <= z ? view : sz - 1 - view;
                out.push_back({l[static_cast<std::size_t>(stored)], z, view});
            }
        }
        return out;
    }

    // The clockwise snap: from the arrival slot of `path` at w, sweep
    // clockwise around w; the first strand found identifies the path whose
    // forward continuation the new path follows.
    int snap_target(int path, int w, int arrived_from) const {
        auto slots = circle(w);
        int self_view = view_index(w, arrived_from, path);
        int at = -1;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (slots[i].path == path && slots[i].neighbor == arrived_from &&
                slots[i].view == self_view) {
                at = static_cast<int>(i);
                break;
            }
        }
        if (at < 0) throw internal_error("arrival slot not found");
        const int sz = static_cast<int>(slots.size());
        for (int step = 1; step < sz; ++step) {
            const auto& s = slots[static_cast<std::size_t>(((at - step) % sz + sz) % sz)];
            if (s.path != path) return s.path;
        }
        throw internal_error("no through strand at the junction");
    }
};

}  // namespace

PathSystem build_path_system(const UnitDiskGraph& g, const Triangulation& t, int s) {
    const int n = g.size();
    PathSystem ps;
    ps.source = s;
    ps.levels = bfs_levels(g, s);
    for (int v = 0; v < n; ++v)
        if (ps.levels.level(v) == kUnreachable)
            throw std::invalid_argument("build_path_system: vertex unreachable from the source");

    ps.records.resize(static_cast<std::size_t>(n));
    Builder b(g, t, ps.corridors);

    PathRecord& rs = ps.records[static_cast<std::size_t>(s)];
    rs.origin = s;
    rs.anchors = {s};
    b.routes[static_cast<std::size_t>(s)] = {s};
    b.pos[static_cast<std::size_t>(s)][s] = 0;

    const int depth = ps.levels.depth();
    for (int a = 1; a <= depth; ++a) {
        std::vector<int> level = ps.levels.levels[static_cast<std::size_t>(a)];
        std::sort(level.begin(), level.end());
        for (int u : level) {
            int w = nearest_lower_neighbor(g, ps.levels, u);
            std::vector<int> seg = delaunay_path(t, u, w);
            for (std::size_t i = 0; i + 1 < seg.size(); ++i)
                if (ps.levels.level(seg[i]) != a)
                    throw internal_error("segment interior off its level");
            if (ps.levels.level(seg.back()) != a - 1)
                throw internal_error("segment anchor on wrong level");

            PathRecord& rec = ps.records[static_cast<std::size_t>(u)];
            rec.origin = u;
            rec.segment = DelaunaySegment{u, w, seg};

            // lanes for the segment edges; the arrival lane at w fixes the
            // starting point of the clockwise snap
            for (std::size_t i = 0; i + 1 < seg.size(); ++i)
                b.insert_lane(u, seg, static_cast<int>(i), seg[i], seg[i + 1]);

            std::vector<int> route = seg;
            if (a >= 2) {
                int f = b.snap_target(u, w, seg[seg.size() - 2]);
                int c = f;
                if (ps.levels.level(f) == a) {
                    if (!ps.records[static_cast<std::size_t>(f)].continuation)
                        throw internal_error("same-level strand without continuation");
                    c = ps.records[static_cast<std::size_t>(f)].continuation->path;
                }
                if (ps.levels.level(c) != a - 1)
                    throw internal_error("continuation on wrong level");
                rec.continuation = PathRecord::Continuation{c, w};

                const auto& croute = b.routes[static_cast<std::size_t>(c)];
                auto it = b.pos[static_cast<std::size_t>(c)].find(w);
                if (it == b.pos[static_cast<std::size_t>(c)].end())
                    throw internal_error("junction not on the continuation path");
                route.insert(route.end(), croute.begin() + it->second + 1, croute.end());

                const auto& canch = ps.records[static_cast<std::size_t>(c)].anchors;
                rec.anchors.assign({u, w});
                rec.anchors.insert(rec.anchors.end(), canch.begin() + 1, canch.end());
            } else {
                rec.anchors = {u, s};
            }

            b.routes[static_cast<std::size_t>(u)] = route;
            auto& pm = b.pos[static_cast<std::size_t>(u)];
            for (std::size_t i = 0; i < route.size(); ++i) {
                if (pm.count(route[i])) throw internal_error("path revisits a vertex");
                pm[route[i]] = static_cast<int>(i);
            }

            // lanes for the adopted suffix
            for (std::size_t i = seg.size() - 1; i + 1 < route.size(); ++i)
                b.insert_lane(u, route, static_cast<int>(i), route[i], route[i + 1]);
        }
    }
    return ps;
}

std::vector<int> materialize_path(const PathSystem& ps, int u) {
    if (u < 0 || u >= static_cast<int>(ps.records.size()))
        throw std::invalid_argument("materialize_path: unknown vertex");
    const PathRecord* rec = &ps.records[static_cast<std::size_t>(u)];
    if (!rec->segment) return {u};
    std::vector<int> out = rec->segment->vertices;
    int guard = 0;
    const int limit = static_cast<int>(ps.records.size()) + 1;
    while (rec->continuation) {
        if (++guard > limit) throw internal_error("cycle in continuation references");
        int c = rec->continuation->path;
        int w = rec->continuation->junction;
        const PathRecord& crec = ps.records[static_cast<std::size_t>(c)];
        if (!crec.segment) throw internal_error("continuation into the bare source record");
        const auto& seg = crec.segment->vertices;
        auto it = std::find(seg.begin(), seg.end(), w);
        if (it == seg.end()) throw internal_error("junction not on continuation segment");
        out.insert(out.end(), it + 1, seg.end());
        rec = &crec;
    }
    return out;
}

std::vector<int> path_anchors(const PathSystem& ps, int u, int x) {
    std::vector<int> mat = materialize_path(ps, u);
    if (std::find(mat.begin(), mat.end(), x) == mat.end())
        throw std::invalid_argument("path_anchors: vertex not on the path");
    const auto& anchors = ps.records[static_cast<std::size_t>(u)].anchors;
    auto it = std::find(anchors.begin(), anchors.end(), x);
    if (it != anchors.end()) return {it, anchors.end()};
    std::vector<int> out{x};
    int lx = ps.levels.level(x);
    for (int v : anchors)
        if (ps.levels.level(v) < lx) out.push_back(v);
    return out;
}

}  // namespace udgsep
