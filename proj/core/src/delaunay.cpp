#include "udgsep/delaunay.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "udgsep/errors.hpp"

namespace udgsep {

namespace {

// ---------------------------------------------------------------------
// Quad-edge structure (Guibas & Stolfi). Directed edges are ints; each
// primal/dual quad occupies four consecutive ids. Only primal edges carry
// origin data.
// ---------------------------------------------------------------------

struct QuadEdge {
    std::vector<int> next;  // onext per directed edge
    std::vector<int> org;   // origin site per directed edge (-1 on duals)
    std::vector<bool> dead; // per quad (index e / 4)
    const std::vector<Point>* pts = nullptr;

    static int rot(int e) { return (e & ~3) | ((e + 1) & 3); }
    static int rot_inv(int e) { return (e & ~3) | ((e + 3) & 3); }
    static int sym(int e) { return (e & ~3) | ((e + 2) & 3); }

    int onext(int e) const { return next[static_cast<std::size_t>(e)]; }
    int oprev(int e) const { return rot(onext(rot(e))); }
    int lnext(int e) const { return rot(onext(rot_inv(e))); }
    int rprev(int e) const { return onext(sym(e)); }
    int dest(int e) const { return org[static_cast<std::size_t>(sym(e))]; }

    int make_edge() {
        int base = static_cast<int>(next.size());
        next.push_back(base);          // q0
        next.push_back(base + 3);      // q1
        next.push_back(base + 2);      // q2
        next.push_back(base + 1);      // q3
        org.insert(org.end(), 4, -1);
        dead.push_back(false);
        return base;
    }

    void splice(int a, int b) {
        int alpha = rot(onext(a));
        int beta = rot(onext(b));
        std::swap(next[static_cast<std::size_t>(a)], next[static_cast<std::size_t>(b)]);
        std::swap(next[static_cast<std::size_t>(alpha)], next[static_cast<std::size_t>(beta)]);
    }

    int connect(int a, int b) {
        int e = make_edge();
        set_org(e, dest(a));
        set_org(sym(e), org[static_cast<std::size_t>(b)]);
        splice(e, lnext(a));
        splice(sym(e), b);
        return e;
    }

    void remove(int e) {
        splice(e, oprev(e));
        splice(sym(e), oprev(sym(e)));
        dead[static_cast<std::size_t>(e / 4)] = true;
    }

    // Flip e within its quadrilateral.
    void flip(int e) {
        int a = oprev(e);
        int b = oprev(sym(e));
        splice(e, a);
        splice(sym(e), b);
        splice(e, lnext(a));
        splice(sym(e), lnext(b));
        set_org(e, dest(a));
        set_org(sym(e), dest(b));
    }

    void set_org(int e, int v) { org[static_cast<std::size_t>(e)] = v; }

    const Point& p_org(int e) const { return (*pts)[static_cast<std::size_t>(org[static_cast<std::size_t>(e)])]; }
    const Point& p_dest(int e) const { return (*pts)[static_cast<std::size_t>(dest(e))]; }

    bool ccw(int a, int b, int c) const {
        return orient((*pts)[static_cast<std::size_t>(a)], (*pts)[static_cast<std::size_t>(b)],
                      (*pts)[static_cast<std::size_t>(c)]) > 0;
    }
    bool right_of(int p, int e) const { return ccw(p, dest(e), org[static_cast<std::size_t>(e)]); }
    bool left_of(int p, int e) const { return ccw(p, org[static_cast<std::size_t>(e)], dest(e)); }

    int in_circle(int a, int b, int c, int d) const {
        const auto& v = *pts;
        return incircle(v[static_cast<std::size_t>(a)], v[static_cast<std::size_t>(b)],
                        v[static_cast<std::size_t>(c)], v[static_cast<std::size_t>(d)]);
    }
};

// Divide-and-conquer Delaunay on sites sorted lexicographically.
// Returns (ccw hull edge at leftmost site, cw hull edge at rightmost site).
std::pair<int, int> dnc_delaunay(QuadEdge& qe, const std::vector<int>& s, int lo, int hi) {
    int count = hi - lo;
    if (count == 2) {
        int a = qe.make_edge();
        qe.set_org(a, s[static_cast<std::size_t>(lo)]);
        qe.set_org(QuadEdge::sym(a), s[static_cast<std::size_t>(lo + 1)]);
        return {a, QuadEdge::sym(a)};
    }
    if (count == 3) {
        int p1 = s[static_cast<std::size_t>(lo)], p2 = s[static_cast<std::size_t>(lo + 1)],
            p3 = s[static_cast<std::size_t>(lo + 2)];
        int a = qe.make_edge();
        int b = qe.make_edge();
        qe.splice(QuadEdge::sym(a), b);
        qe.set_org(a, p1);
        qe.set_org(QuadEdge::sym(a), p2);
        qe.set_org(b, p2);
        qe.set_org(QuadEdge::sym(b), p3);
        if (qe.ccw(p1, p2, p3)) {
            qe.connect(b, a);
            return {a, QuadEdge::sym(b)};
        }
        if (qe.ccw(p1, p3, p2)) {
            int c = qe.connect(b, a);
            return {QuadEdge::sym(c), c};
        }
        return {a, QuadEdge::sym(b)};  // collinear triple
    }

    int mid = lo + count / 2;
    auto [ldo, ldi] = dnc_delaunay(qe, s, lo, mid);
    auto [rdi, rdo] = dnc_delaunay(qe, s, mid, hi);

    // lower common tangent
    for (;;) {
        if (qe.left_of(qe.org[static_cast<std::size_t>(rdi)], ldi)) {
            ldi = qe.lnext(ldi);
        } else if (qe.right_of(qe.org[static_cast<std::size_t>(ldi)], rdi)) {
            rdi = qe.rprev(rdi);
        } else {
            break;
        }
    }

    int basel = qe.connect(QuadEdge::sym(rdi), ldi);
    if (qe.org[static_cast<std::size_t>(ldi)] == qe.org[static_cast<std::size_t>(ldo)])
        ldo = QuadEdge::sym(basel);
    if (qe.org[static_cast<std::size_t>(rdi)] == qe.org[static_cast<std::size_t>(rdo)])
        rdo = basel;

    auto valid = [&](int e) { return qe.right_of(qe.dest(e), basel); };
    for (;;) {
        int lcand = qe.onext(QuadEdge::sym(basel));
        if (valid(lcand)) {
            while (qe.in_circle(qe.dest(basel), qe.org[static_cast<std::size_t>(basel)],
                                qe.dest(lcand), qe.dest(qe.onext(lcand))) > 0) {
                int t = qe.onext(lcand);
                qe.remove(lcand);
                lcand = t;
            }
        }
        int rcand = qe.oprev(basel);
        if (valid(rcand)) {
            while (qe.in_circle(qe.dest(basel), qe.org[static_cast<std::size_t>(basel)],
                                qe.dest(rcand), qe.dest(qe.oprev(rcand))) > 0) {
                int t = qe.oprev(rcand);
                qe.remove(rcand);
                rcand = t;
            }
        }
        bool lvalid = valid(lcand), rvalid = valid(rcand);
        if (!lvalid && !rvalid) break;
        if (!lvalid || (rvalid && qe.in_circle(qe.dest(lcand), qe.org[static_cast<std::size_t>(lcand)],
                                               qe.org[static_cast<std::size_t>(rcand)],
                                               qe.dest(rcand)) > 0)) {
            basel = qe.connect(rcand, QuadEdge::sym(basel));
        } else {
            basel = qe.connect(QuadEdge::sym(basel), QuadEdge::sym(lcand));
        }
    }
    return {ldo, rdo};
}

// Deterministic resolution of cocircular quads: prefer the diagonal with the
// lexicographically smaller (min, max) index pair. Repeats to a fixed point.
void canonicalize_cocircular(QuadEdge& qe) {
    bool changed = true;
    while (changed) {
        changed = false;
        // deterministic scan order: quads ascending, orient each by org<dest
        for (std::size_t q = 0; q < qe.dead.size(); ++q) {
            if (qe.dead[q]) continue;
            int e = static_cast<int>(q * 4);
            int a = qe.org[static_cast<std::size_t>(e)], b = qe.dest(e);
            if (a > b) {
                e = QuadEdge::sym(e);
                std::swap(a, b);
            }
            // triangle-ness of both sides
            if (qe.lnext(qe.lnext(qe.lnext(e))) != e) continue;
            int es = QuadEdge::sym(e);
            if (qe.lnext(qe.lnext(qe.lnext(es))) != es) continue;
            int c = qe.dest(qe.lnext(e));    // apex of left face
            int d = qe.dest(qe.lnext(es));   // apex of right face
            if (c == d) continue;
            // strictly convex quadrilateral around e
            const auto& pts = *qe.pts;
            auto P = [&](int v) -> const Point& { return pts[static_cast<std::size_t>(v)]; };
            if (orient(P(c), P(d), P(a)) * orient(P(c), P(d), P(b)) >= 0) continue;
            if (orient(P(a), P(b), P(c)) * orient(P(a), P(b), P(d)) >= 0) continue;
            if (incircle(P(a), P(b), P(c), P(d)) != 0) continue;
            std::pair<int, int> old_pair{a, b};
            std::pair<int, int> new_pair{std::min(c, d), std::max(c, d)};
            if (new_pair < old_pair) {
                qe.flip(e);
                changed = true;
            }
        }
    }
}

}  // namespace

namespace {

// Shared face traversal: next directed edge of (u -> v) is (v -> w) where w
// precedes u in v's CCW ring. This walks the face to the left of (u -> v);
// bounded faces of a straight-line embedding come out counterclockwise.
struct FaceSet {
    std::vector<std::vector<int>> faces;
    std::vector<std::array<int, 2>> edge_faces;
};

FaceSet trace_faces(int n, const std::vector<std::vector<int>>& rotation,
                    const std::map<std::pair<int, int>, int>& edge_index) {
    std::vector<std::map<int, int>> pos(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        for (std::size_t k = 0; k < rotation[static_cast<std::size_t>(v)].size(); ++k)
            pos[static_cast<std::size_t>(v)][rotation[static_cast<std::size_t>(v)][k]] =
                static_cast<int>(k);

    FaceSet out;
    out.edge_faces.assign(edge_index.size(), {-1, -1});
    std::set<std::pair<int, int>> seen;
    for (int v = 0; v < n; ++v) {
        for (int nb : rotation[static_cast<std::size_t>(v)]) {
            if (seen.count({v, nb})) continue;
            std::vector<int> cycle;
            int cu = v, cv = nb;
            while (!seen.count({cu, cv})) {
                seen.insert({cu, cv});
                cycle.push_back(cu);
                const auto& ring = rotation[static_cast<std::size_t>(cv)];
                int k = pos[static_cast<std::size_t>(cv)].at(cu);
                int w = ring[static_cast<std::size_t>((k + ring.size() - 1) % ring.size())];
                cu = cv;
                cv = w;
            }
            int fid = static_cast<int>(out.faces.size());
            out.faces.push_back(cycle);
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                int a = cycle[i], b = cycle[(i + 1) % cycle.size()];
                auto it = edge_index.find({std::min(a, b), std::max(a, b)});
                if (it == edge_index.end()) throw internal_error("face edge missing from index");
                auto& ef = out.edge_faces[static_cast<std::size_t>(it->second)];
                if (ef[0] == -1) ef[0] = fid;
                else ef[1] = fid;
            }
        }
    }
    return out;
}

}  // namespace

Triangulation build_delaunay(const std::vector<Point>& points) {
    const int n = static_cast<int>(points.size());
    if (n < 3)
        throw degenerate_error(degenerate_error::kind::too_few_points,
                               "Delaunay triangulation needs at least 3 points");
    {
        std::set<Point> uniq(points.begin(), points.end());
        if (static_cast<int>(uniq.size()) != n)
            throw degenerate_error(degenerate_error::kind::duplicate_points,
                                   "duplicate points");
    }
    bool any_noncollinear = false;
    for (int k = 2; k < n && !any_noncollinear; ++k)
        if (orient(points[0], points[1], points[static_cast<std::size_t>(k)]) != 0)
            any_noncollinear = true;
    if (!any_noncollinear)
        throw degenerate_error(degenerate_error::kind::collinear, "all points collinear");

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return points[static_cast<std::size_t>(a)] < points[static_cast<std::size_t>(b)];
    });

    QuadEdge qe;
    qe.pts = &points;
    dnc_delaunay(qe, order, 0, n);
    canonicalize_cocircular(qe);

    Triangulation t;
    t.sites = points;

    // adjacency from live quads
    std::vector<std::vector<int>> out_edges(static_cast<std::size_t>(n));
    std::set<std::pair<int, int>> undirected;
    for (std::size_t q = 0; q < qe.dead.size(); ++q) {
        if (qe.dead[q]) continue;
        int e = static_cast<int>(q * 4);
        int a = qe.org[static_cast<std::size_t>(e)], b = qe.dest(e);
        out_edges[static_cast<std::size_t>(a)].push_back(e);
        out_edges[static_cast<std::size_t>(b)].push_back(QuadEdge::sym(e));
        undirected.insert({std::min(a, b), std::max(a, b)});
    }
    t.edges.assign(undirected.begin(), undirected.end());
    for (std::size_t i = 0; i < t.edges.size(); ++i)
        t.edge_index[t.edges[i]] = static_cast<int>(i);

    // CCW rings via onext; normalize start to the smallest neighbor
    t.rotation.assign(static_cast<std::size_t>(n), {});
    for (int v = 0; v < n; ++v) {
        if (out_edges[static_cast<std::size_t>(v)].empty())
            throw internal_error("isolated site in triangulation");
        int start = out_edges[static_cast<std::size_t>(v)][0];
        std::vector<int> ring;
        int e = start;
        do {
            ring.push_back(qe.dest(e));
            e = qe.onext(e);
        } while (e != start);
        auto smallest = std::min_element(ring.begin(), ring.end());
        std::rotate(ring.begin(), smallest, ring.end());
        t.rotation[static_cast<std::size_t>(v)] = std::move(ring);
    }

    FaceSet fs = trace_faces(n, t.rotation, t.edge_index);
    t.faces = std::move(fs.faces);
    t.edge_faces = std::move(fs.edge_faces);

    // The unbounded face is the one with negative signed area.
    t.outer_face = -1;
    for (std::size_t f = 0; f < t.faces.size(); ++f) {
        const auto& cyc = t.faces[f];
        Rat area2(0);
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const Point& a = points[static_cast<std::size_t>(cyc[i])];
            const Point& b = points[static_cast<std::size_t>(cyc[(i + 1) % cyc.size()])];
            area2 += a.x * b.y - b.x * a.y;
        }
        if (sgn(area2) < 0) {
            if (t.outer_face != -1) throw internal_error("two unbounded faces");
            t.outer_face = static_cast<int>(f);
        }
    }
    if (t.outer_face == -1) throw internal_error("no unbounded face");

    // hull: the outer face runs clockwise; reverse it
    t.hull = t.faces[static_cast<std::size_t>(t.outer_face)];
    std::reverse(t.hull.begin(), t.hull.end());
    auto hmin = std::min_element(t.hull.begin(), t.hull.end());
    std::rotate(t.hull.begin(), hmin, t.hull.end());

    long long V = n, E = static_cast<long long>(t.edges.size()),
              F = static_cast<long long>(t.faces.size());
    if (V - E + F != 2) throw internal_error("Euler formula violated after build");
    return t;
}

AugmentedTriangulation close_outer_face(const Triangulation& t) {
    AugmentedTriangulation a;
    a.base = t;
    const int n = static_cast<int>(t.sites.size());
    const auto& hull = t.hull;
    const int h = static_cast<int>(hull.size());

    a.rotation = t.rotation;
    a.edges = t.edges;
    a.edge_index = t.edge_index;
    a.outer_at.assign(static_cast<std::size_t>(n), {});

    if (h > 3) {
        std::vector<int> hull_pos(static_cast<std::size_t>(n), -1);
        for (int i = 0; i < h; ++i)
            hull_pos[static_cast<std::size_t>(hull[static_cast<std::size_t>(i)])] = i;
        // apex: smallest-index hull vertex with no chord to another hull vertex
        std::vector<int> by_index = hull;
        std::sort(by_index.begin(), by_index.end());
        int apex = -1;
        for (int cand : by_index) {
            int p = hull_pos[static_cast<std::size_t>(cand)];
            bool chord = false;
            for (int nb : t.rotation[static_cast<std::size_t>(cand)]) {
                int qp = hull_pos[static_cast<std::size_t>(nb)];
                if (qp < 0) continue;
                int diff = (qp - p + h) % h;
                if (diff != 1 && diff != h - 1) {
                    chord = true;
                    break;
                }
            }
            if (!chord) {
                apex = cand;
                break;
            }
        }
        if (apex == -1) throw internal_error("no chord-free hull vertex for the outer fan");
        a.apex = apex;

        // local hull order d_0 = apex, d_1, ..., d_{h-1} (CCW)
        int ap = hull_pos[static_cast<std::size_t>(apex)];
        std::vector<int> d(static_cast<std::size_t>(h));
        for (int i = 0; i < h; ++i) d[static_cast<std::size_t>(i)] = hull[static_cast<std::size_t>((ap + i) % h)];

        for (int i = 2; i <= h - 2; ++i) {
            int v = d[static_cast<std::size_t>(i)];
            int lo = std::min(apex, v), hi = std::max(apex, v);
            a.outer_edges.emplace_back(lo, hi);
            a.edge_index[{lo, hi}] = static_cast<int>(a.edges.size());
            a.edges.emplace_back(lo, hi);
        }

        // rotation surgery: every site's ring spans its interior sector;
        // rotate hull rings to start at the hull successor, then append the
        // gap edges.
        auto rotate_ring_to = [&](int v, int first) {
            auto& ring = a.rotation[static_cast<std::size_t>(v)];
            auto it = std::find(ring.begin(), ring.end(), first);
            if (it == ring.end()) throw internal_error("hull neighbor missing from ring");
            std::rotate(ring.begin(), it, ring.end());
        };
        // apex: ring starts at d_1, ends at d_{h-1}; gap gets d_{h-2} ... d_2
        rotate_ring_to(apex, d[1]);
        for (int i = h - 2; i >= 2; --i)
            a.rotation[static_cast<std::size_t>(apex)].push_back(d[static_cast<std::size_t>(i)]);
        for (int i = h - 2; i >= 2; --i)
            a.outer_at[static_cast<std::size_t>(apex)].push_back(d[static_cast<std::size_t>(i)]);
        // intermediate hull vertices: one fan edge each, in their gap
        for (int i = 2; i <= h - 2; ++i) {
            int v = d[static_cast<std::size_t>(i)];
            rotate_ring_to(v, d[static_cast<std::size_t>(i + 1)]);
            a.rotation[static_cast<std::size_t>(v)].push_back(apex);
            a.outer_at[static_cast<std::size_t>(v)].push_back(apex);
        }
    }

    FaceSet fs = trace_faces(n, a.rotation, a.edge_index);
    a.faces = std::move(fs.faces);
    a.edge_faces = std::move(fs.edge_faces);
    for (const auto& f : a.faces)
        if (f.size() != 3) throw internal_error("non-triangle face after outer closure");
    long long V = n, E = static_cast<long long>(a.edges.size()),
              F = static_cast<long long>(a.faces.size());
    if (V - E + F != 2) throw internal_error("Euler formula violated after closure");
    return a;
}

DualAdjacency dual_adjacency(const AugmentedTriangulation& t) {
    DualAdjacency d;
    d.edge_faces = t.edge_faces;
    d.face_neighbors.assign(t.faces.size(), {});
    for (const auto& ef : t.edge_faces) {
        if (ef[0] == -1 || ef[1] == -1) throw internal_error("edge with missing face");
        d.face_neighbors[static_cast<std::size_t>(ef[0])].push_back(ef[1]);
        d.face_neighbors[static_cast<std::size_t>(ef[1])].push_back(ef[0]);
    }
    return d;
}

std::vector<int> voronoi_segment_walk(const Triangulation& t, int u, int w) {
    if (u == w) throw std::invalid_argument("voronoi_segment_walk: u == w");
    const auto& pts = t.sites;
    const Point& pu = pts[static_cast<std::size_t>(u)];
    const Point& pw = pts[static_cast<std::size_t>(w)];
    Rat dx = pw.x - pu.x, dy = pw.y - pu.y;

    std::vector<int> seq{u};
    std::vector<bool> visited(pts.size(), false);
    visited[static_cast<std::size_t>(u)] = true;

    int v = u;
    Rat tcur(0);
    // p(t) = u + t (w - u). For a site z, f_z(t) = |p-z|^2 - |p-v|^2 is
    // linear; the segment leaves cell(v) at the earliest root with negative
    // slope among Delaunay neighbors z.
    while (v != w) {
        const Point& pv = pts[static_cast<std::size_t>(v)];
        bool found = false;
        Rat best_t(0);
        int best_z = -1;
        for (int z : t.rotation[static_cast<std::size_t>(v)]) {
            const Point& pz = pts[static_cast<std::size_t>(z)];
            Rat A = sq_dist(pu, pz) - sq_dist(pu, pv);
            Rat B = 2 * (dx * (pv.x - pz.x) + dy * (pv.y - pz.y));
            if (sgn(B) >= 0) continue;
            Rat tstar = -A / B;
            if (tstar < tcur || tstar > 1) continue;
            if (!found || tstar < best_t || (tstar == best_t && z < best_z)) {
                found = true;
                best_t = tstar;
                best_z = z;
            }
        }
        if (!found) throw internal_error("voronoi walk did not reach the target cell");
        if (visited[static_cast<std::size_t>(best_z)])
            throw internal_error("voronoi walk revisited a cell");
        visited[static_cast<std::size_t>(best_z)] = true;
        seq.push_back(best_z);
        v = best_z;
        tcur = best_t;
    }
    return seq;
}

}  // namespace udgsep
