#include "udgsep/oracle.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "udgsep/errors.hpp"

namespace udgsep {

namespace {

std::string join_ints(std::initializer_list<int> xs) {
    std::ostringstream os;
    bool first = true;
    for (int x : xs) {
        if (!first) os << ",";
        os << x;
        first = false;
    }
    return os.str();
}

// plain BFS distances, written here so the checks do not lean on the
// structures they certify
std::vector<int> bfs_dist(const UnitDiskGraph& g, int s) {
    std::vector<int> dist(static_cast<std::size_t>(g.size()), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int nb : g.neighbors(v)) {
            if (dist[static_cast<std::size_t>(nb)] == -1) {
                dist[static_cast<std::size_t>(nb)] = dist[static_cast<std::size_t>(v)] + 1;
                q.push(nb);
            }
        }
    }
    return dist;
}

}  // namespace

VerificationReport check_separator_balance(const UnitDiskGraph& g,
                                           const std::vector<int>& separator_set,
                                           long long bound_num, long long bound_den) {
    VerificationReport rep;
    rep.name = "separator_balance";
    const int n = g.size();
    long long bound = bound_num * n / bound_den;

    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    for (int v : separator_set) removed[static_cast<std::size_t>(v)] = 1;

    std::vector<int> comp_id(static_cast<std::size_t>(n), -1);
    int ncomp = 0;
    for (int v = 0; v < n; ++v) {
        if (removed[static_cast<std::size_t>(v)] || comp_id[static_cast<std::size_t>(v)] != -1)
            continue;
        long long size = 0;
        std::queue<int> q;
        q.push(v);
        comp_id[static_cast<std::size_t>(v)] = ncomp;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            ++size;
            for (int nb : g.neighbors(x)) {
                if (removed[static_cast<std::size_t>(nb)] ||
                    comp_id[static_cast<std::size_t>(nb)] != -1)
                    continue;
                comp_id[static_cast<std::size_t>(nb)] = ncomp;
                q.push(nb);
            }
        }
        if (size > bound)
            rep.fail("component of size " + std::to_string(size) + " exceeds " +
                     std::to_string(bound));
        ++ncomp;
    }
    rep.counts.emplace_back("components", ncomp);
    rep.counts.emplace_back("separator_size", static_cast<long long>(separator_set.size()));

    // brute-force scan: no surviving edge joins two components
    for (int v = 0; v < n; ++v) {
        if (removed[static_cast<std::size_t>(v)]) continue;
        for (int nb : g.neighbors(v)) {
            if (nb < v || removed[static_cast<std::size_t>(nb)]) continue;
            if (comp_id[static_cast<std::size_t>(v)] != comp_id[static_cast<std::size_t>(nb)])
                rep.fail("edge " + join_ints({v, nb}) + " joins two components");
        }
    }
    return rep;
}

VerificationReport check_pseudo_shortest(const UnitDiskGraph& g, const std::vector<int>& path,
                                         const std::vector<int>& anchors, int s) {
    VerificationReport rep;
    rep.name = "pseudo_shortest";
    if (path.empty() || anchors.empty()) {
        rep.fail("empty path or anchor list");
        return rep;
    }
    std::set<int> on_path(path.begin(), path.end());
    for (int a : anchors)
        if (!on_path.count(a)) rep.fail("anchor " + std::to_string(a) + " not on path");

    std::vector<int> dist = bfs_dist(g, s);
    if (anchors.back() != s) rep.fail("anchor list does not end at the source");
    if (static_cast<int>(anchors.size()) - 1 != dist[static_cast<std::size_t>(anchors.front())])
        rep.fail("anchor count does not match the BFS distance");
    for (std::size_t i = 0; i + 1 < anchors.size(); ++i) {
        int a = anchors[i], b = anchors[i + 1];
        if (!g.adjacent(a, b)) rep.fail("anchors " + join_ints({a, b}) + " not adjacent");
        if (dist[static_cast<std::size_t>(a)] != dist[static_cast<std::size_t>(b)] + 1)
            rep.fail("anchor levels " + join_ints({a, b}) + " do not descend by one");
    }

    std::set<int> anchor_set(anchors.begin(), anchors.end());
    for (int v : path) {
        if (anchor_set.count(v)) continue;
        bool ok = false;
        for (int a : anchors)
            if (g.adjacent(v, a)) {
                ok = true;
                break;
            }
        if (!ok) rep.fail("path vertex " + std::to_string(v) + " not adjacent to any anchor");
    }
    return rep;
}

VerificationReport check_noncrossing_chains(const std::vector<std::vector<Point>>& chains) {
    VerificationReport rep;
    rep.name = "noncrossing";
    std::vector<std::optional<Chain>> built;
    built.reserve(chains.size());
    for (const auto& c : chains)
        built.emplace_back(c.size() >= 2 ? std::optional<Chain>(Chain(c)) : std::nullopt);
    long long pairs = 0;
    for (std::size_t i = 0; i < built.size(); ++i) {
        if (!built[i]) continue;
        for (std::size_t j = i + 1; j < built.size(); ++j) {
            if (!built[j]) continue;
            ++pairs;
            CrossReport r = chains_cross(*built[i], *built[j]);
            if (r.kind != CrossKind::None) {
                const char* kind = r.kind == CrossKind::Simple ? "simple"
                                   : r.kind == CrossKind::Forward ? "forward"
                                                                  : "backward";
                rep.fail("chains " + std::to_string(i) + " and " + std::to_string(j) +
                         " cross (" + kind + ")");
            }
        }
    }
    rep.counts.emplace_back("pairs", pairs);
    return rep;
}

VerificationReport check_noncrossing_system(const PathSystem& ps, const UnitDiskGraph& g) {
    std::vector<std::vector<Point>> chains;
    for (int u = 0; u < g.size(); ++u) {
        std::vector<int> mat = materialize_path(ps, u);
        std::vector<Point> c;
        c.reserve(mat.size());
        for (int v : mat) c.push_back(g.point(v));
        chains.push_back(std::move(c));
    }
    VerificationReport rep = check_noncrossing_chains(chains);
    rep.name = "noncrossing_system";
    return rep;
}

VerificationReport check_dd_properties(const DelaunaySegment& seg,
                                       const std::vector<Point>& points) {
    VerificationReport rep;
    rep.name = "delaunay_path_properties";
    const auto& vs = seg.vertices;
    const int len = static_cast<int>(vs.size());
    if (len < 1 || vs.front() != seg.origin || vs.back() != seg.anchor) {
        rep.fail("segment endpoints disagree with its vertex list");
        return rep;
    }
    const Point& pu = points[static_cast<std::size_t>(seg.origin)];
    const Point& pw = points[static_cast<std::size_t>(seg.anchor)];
    Rat diam2 = sq_dist(pu, pw);
    for (int i = 0; i < len; ++i) {
        const Point& pi = points[static_cast<std::size_t>(vs[static_cast<std::size_t>(i)])];
        Rat cx = 2 * pi.x - pu.x - pw.x;
        Rat cy = 2 * pi.y - pu.y - pw.y;
        if (cx * cx + cy * cy > diam2)
            rep.fail("vertex " + std::to_string(vs[static_cast<std::size_t>(i)]) +
                     " outside the diameter disk");
        for (int j = i + 1; j < len; ++j) {
            const Point& pj = points[static_cast<std::size_t>(vs[static_cast<std::size_t>(j)])];
            if (sq_dist(pi, pj) > Rat(1))
                rep.fail("pair " + join_ints({vs[static_cast<std::size_t>(i)],
                                              vs[static_cast<std::size_t>(j)]}) +
                         " beyond unit distance");
        }
    }
    // distance monotonicity holds anchored at the two endpoints
    for (int j = 1; j + 1 < len; ++j) {
        const Point& a = points[static_cast<std::size_t>(vs[static_cast<std::size_t>(j)])];
        const Point& b = points[static_cast<std::size_t>(vs[static_cast<std::size_t>(j + 1)])];
        if (!(sq_dist(pu, a) < sq_dist(pu, b)))
            rep.fail("distances from the origin not increasing at index " + std::to_string(j));
        const Point& c = points[static_cast<std::size_t>(vs[static_cast<std::size_t>(len - 1 - j)])];
        const Point& d = points[static_cast<std::size_t>(vs[static_cast<std::size_t>(len - 2 - j)])];
        if (!(sq_dist(pw, c) < sq_dist(pw, d)))
            rep.fail("distances from the anchor not increasing at index " + std::to_string(j));
    }
    return rep;
}

VerificationReport check_crominating_all(const std::vector<Point>& points,
                                         bool strict_threshold) {
    VerificationReport rep;
    rep.name = "crominating";
    UnitDiskGraph g = UnitDiskGraph::build(points, strict_threshold);
    Triangulation tri = build_delaunay(points);
    long long tested = 0;
    for (const auto& [u, v] : tri.edges) {
        for (int x = 0; x < g.size(); ++x) {
            if (x == u || x == v) continue;
            for (int y : g.neighbors(x)) {
                if (y <= x || y == u || y == v) continue;
                ++tested;
                if (!crominates(g, u, v, x, y))
                    rep.fail("delaunay edge " + join_ints({u, v}) +
                             " fails against unit-disk edge " + join_ints({x, y}));
            }
        }
    }
    rep.counts.emplace_back("pairs", tested);
    return rep;
}

VerificationReport check_path_system(const PathSystem& ps, const UnitDiskGraph& g,
                                     const Triangulation& tri) {
    VerificationReport rep;
    rep.name = "path_system";
    std::vector<char> covered(static_cast<std::size_t>(g.size()), 0);
    for (int u = 0; u < g.size(); ++u) {
        std::vector<int> mat = materialize_path(ps, u);
        std::set<int> uniq(mat.begin(), mat.end());
        if (uniq.size() != mat.size())
            rep.fail("path of " + std::to_string(u) + " repeats a vertex");
        if (mat.front() != u || mat.back() != ps.source)
            rep.fail("path of " + std::to_string(u) + " has wrong endpoints");
        for (int v : mat) covered[static_cast<std::size_t>(v)] = 1;
        for (std::size_t i = 0; i + 1 < mat.size(); ++i)
            if (!tri.has_edge(mat[i], mat[i + 1]))
                rep.fail("path edge " + join_ints({mat[i], mat[i + 1]}) +
                         " is not a Delaunay edge");
    }
    for (int v = 0; v < g.size(); ++v)
        if (!covered[static_cast<std::size_t>(v)])
            rep.fail("vertex " + std::to_string(v) + " not covered by any path");
    return rep;
}

VerificationReport check_perturbed_certificate(const PerturbedGraph& pg,
                                               const AugmentedTriangulation& at) {
    VerificationReport rep;
    rep.name = "perturbed_certificate";

    // independent face traversal over the rotation system
    const int ne = static_cast<int>(pg.edges.size());
    std::vector<int> seen(static_cast<std::size_t>(2 * ne), 0);
    std::vector<std::map<int, int>> rpos(static_cast<std::size_t>(pg.node_count()));
    for (int v = 0; v < pg.node_count(); ++v)
        for (std::size_t k = 0; k < pg.rotation[static_cast<std::size_t>(v)].size(); ++k)
            rpos[static_cast<std::size_t>(v)][pg.rotation[static_cast<std::size_t>(v)][k]] =
                static_cast<int>(k);
    long long faces = 0;
    for (int h0 = 0; h0 < 2 * ne; ++h0) {
        if (seen[static_cast<std::size_t>(h0)]) continue;
        ++faces;
        int h = h0;
        int steps = 0;
        do {
            seen[static_cast<std::size_t>(h)] = 1;
            int v = pg.half_head(h);
            const auto& ring = pg.rotation[static_cast<std::size_t>(v)];
            auto it = rpos[static_cast<std::size_t>(v)].find(PerturbedGraph::reverse_half(h));
            if (it == rpos[static_cast<std::size_t>(v)].end()) {
                rep.fail("rotation misses a half edge");
                return rep;
            }
            h = ring[static_cast<std::size_t>((it->second + static_cast<int>(ring.size()) - 1) %
                                              static_cast<int>(ring.size()))];
            ++steps;
        } while (h != h0 && steps <= 2 * ne);
        if (steps != 3) rep.fail("face of size " + std::to_string(steps));
    }
    long long V = pg.node_count(), E = ne;
    if (V - E + faces != 2)
        rep.fail("Euler formula: V=" + std::to_string(V) + " E=" + std::to_string(E) +
                 " F=" + std::to_string(faces));
    rep.counts.emplace_back("nodes", V);
    rep.counts.emplace_back("edges", E);
    rep.counts.emplace_back("faces", faces);

    // edge categories are faithful to their meaning
    long long tree_edges = 0;
    for (const auto& e : pg.edges) {
        int oa = pg.node_original[static_cast<std::size_t>(e.a)];
        int ob = pg.node_original[static_cast<std::size_t>(e.b)];
        switch (e.cat) {
            case PerturbEdgeCat::Path:
                ++tree_edges;
                break;
            case PerturbEdgeCat::Vertex:
                if (oa != ob) rep.fail("vertex edge joins different originals");
                break;
            case PerturbEdgeCat::Tri: {
                auto key = std::minmax(oa, ob);
                if (oa == ob || !at.edge_index.count({key.first, key.second}))
                    rep.fail("tri edge " + join_ints({oa, ob}) + " is not faithful");
                break;
            }
            case PerturbEdgeCat::Outer:
                if (!at.is_outer_pair(oa, ob)) rep.fail("outer edge not from the closure");
                break;
        }
    }

    // spider tree spans every node and uses exactly the path edges
    if (tree_edges != V - 1) rep.fail("path edge count is not V-1");
    for (int v = 0; v < pg.node_count(); ++v) {
        int cur = v, steps = 0;
        while (cur != pg.source_node) {
            int pe = pg.parent_edge[static_cast<std::size_t>(cur)];
            if (pe < 0 || pg.edges[static_cast<std::size_t>(pe)].cat != PerturbEdgeCat::Path) {
                rep.fail("broken parent chain at node " + std::to_string(v));
                break;
            }
            cur = pg.parent[static_cast<std::size_t>(cur)];
            if (++steps > pg.node_count()) {
                rep.fail("parent chain does not reach the source");
                break;
            }
        }
    }
    return rep;
}

VerificationReport check_separator_structure(const UnitDiskGraph& g, const SeparatorResult& r) {
    VerificationReport rep;
    rep.name = "separator_structure";
    if (r.mode != SeparatorResult::Mode::Pipeline) {
        rep.counts.emplace_back("skipped_non_pipeline", 1);
        return rep;
    }
    std::vector<int> dist = bfs_dist(g, r.source);
    auto check_sp = [&](const std::vector<int>& sp, const char* which) {
        if (sp.empty() || sp.back() != r.source) {
            rep.fail(std::string(which) + " does not end at the source");
            return;
        }
        if (dist[static_cast<std::size_t>(sp.front())] != static_cast<int>(sp.size()) - 1)
            rep.fail(std::string(which) + " is not a shortest path");
        for (std::size_t i = 0; i + 1 < sp.size(); ++i) {
            if (!g.adjacent(sp[i], sp[i + 1]))
                rep.fail(std::string(which) + " has non-adjacent consecutive vertices");
            if (dist[static_cast<std::size_t>(sp[i])] !=
                dist[static_cast<std::size_t>(sp[i + 1])] + 1)
                rep.fail(std::string(which) + " levels do not strictly decrease");
        }
    };
    check_sp(r.sp_u, "sp_u");
    check_sp(r.sp_v, "sp_v");

    std::vector<int> apex{r.apex_u};
    if (r.apex_v != r.apex_u) apex.push_back(r.apex_v);
    if (apex.size() > 2) rep.fail("more than two apex vertices");

    std::vector<int> expected = one_neighborhood_closure(g, r.sp_u, r.sp_v, apex);
    if (expected != r.separator_set)
        rep.fail("separator set differs from the closure of the certified paths");
    return rep;
}

VerificationReport check_crossing_kill(const UnitDiskGraph& g, const SeparatorResult& r) {
    VerificationReport rep;
    rep.name = "crossing_kill";
    if (r.mode != SeparatorResult::Mode::Pipeline) {
        rep.counts.emplace_back("skipped_non_pipeline", 1);
        return rep;
    }
    std::vector<Segment> drawn;
    auto add_suffix = [&](const std::vector<int>& suf) {
        for (std::size_t i = 0; i + 1 < suf.size(); ++i)
            drawn.emplace_back(g.point(suf[i]), g.point(suf[i + 1]));
    };
    add_suffix(r.suffix_u);
    add_suffix(r.suffix_v);
    if (r.apex_kind == ApexKind::DelaunayEdge)
        drawn.emplace_back(g.point(r.apex_u), g.point(r.apex_v));

    std::vector<char> removed(static_cast<std::size_t>(g.size()), 0);
    for (int v : r.separator_set) removed[static_cast<std::size_t>(v)] = 1;

    long long survivors = 0;
    for (int v = 0; v < g.size(); ++v) {
        if (removed[static_cast<std::size_t>(v)]) continue;
        for (int nb : g.neighbors(v)) {
            if (nb < v || removed[static_cast<std::size_t>(nb)]) continue;
            ++survivors;
            Segment e(g.point(v), g.point(nb));
            for (const Segment& d : drawn) {
                if (segments_cross(e, d)) {
                    rep.fail("surviving edge " + join_ints({v, nb}) +
                             " crosses the cycle image");
                    break;
                }
            }
        }
    }
    rep.counts.emplace_back("surviving_edges", survivors);
    return rep;
}

std::pair<long long, long long> brute_force_cycle_weights(const PerturbedGraph& pg,
                                                          int non_tree_edge) {
    if (pg.edges[static_cast<std::size_t>(non_tree_edge)].cat == PerturbEdgeCat::Path)
        throw std::invalid_argument("brute_force_cycle_weights: tree edge");

    // cycle edge set: the apex plus tree edges along both arms to the meet
    std::set<int> blocked{non_tree_edge};
    int a = pg.edges[static_cast<std::size_t>(non_tree_edge)].a;
    int b = pg.edges[static_cast<std::size_t>(non_tree_edge)].b;
    // meet: deepest common ancestor in the spider
    auto climb = [&](int from, std::set<int>& nodes) {
        for (int cur = from;; cur = pg.parent[static_cast<std::size_t>(cur)]) {
            nodes.insert(cur);
            if (cur == pg.source_node) break;
        }
    };
    std::set<int> a_anc;
    climb(a, a_anc);
    int meet = b;
    while (!a_anc.count(meet)) meet = pg.parent[static_cast<std::size_t>(meet)];
    std::set<int> cycle_nodes;
    for (int cur = a; cur != meet; cur = pg.parent[static_cast<std::size_t>(cur)]) {
        cycle_nodes.insert(cur);
        blocked.insert(pg.parent_edge[static_cast<std::size_t>(cur)]);
    }
    for (int cur = b; cur != meet; cur = pg.parent[static_cast<std::size_t>(cur)]) {
        cycle_nodes.insert(cur);
        blocked.insert(pg.parent_edge[static_cast<std::size_t>(cur)]);
    }
    cycle_nodes.insert(meet);

    // flood faces from the root side without stepping over cycle edges
    const int nf = static_cast<int>(pg.face_halves.size());
    std::vector<char> reached(static_cast<std::size_t>(nf), 0);
    std::queue<int> q;
    int root = cycle_root_face(pg);
    reached[static_cast<std::size_t>(root)] = 1;
    q.push(root);
    while (!q.empty()) {
        int f = q.front();
        q.pop();
        for (int h : pg.face_halves[static_cast<std::size_t>(f)]) {
            int e = h / 2;
            if (blocked.count(e)) continue;
            int other = pg.half_face[static_cast<std::size_t>(PerturbedGraph::reverse_half(h))];
            if (!reached[static_cast<std::size_t>(other)]) {
                reached[static_cast<std::size_t>(other)] = 1;
                q.push(other);
            }
        }
    }

    // a node is strictly inside when every incident face is unreached
    std::vector<char> any_reached(static_cast<std::size_t>(pg.node_count()), 0);
    std::vector<char> any_unreached(static_cast<std::size_t>(pg.node_count()), 0);
    for (int h = 0; h < 2 * static_cast<int>(pg.edges.size()); ++h) {
        int v = pg.half_tail(h);
        if (reached[static_cast<std::size_t>(pg.half_face[static_cast<std::size_t>(h)])])
            any_reached[static_cast<std::size_t>(v)] = 1;
        else
            any_unreached[static_cast<std::size_t>(v)] = 1;
    }
    long long inside = 0, outside = 0;
    for (int v = 0; v < pg.node_count(); ++v) {
        if (cycle_nodes.count(v)) continue;
        if (any_reached[static_cast<std::size_t>(v)] && !any_unreached[static_cast<std::size_t>(v)])
            outside += pg.weight[static_cast<std::size_t>(v)];
        else if (!any_reached[static_cast<std::size_t>(v)] &&
                 any_unreached[static_cast<std::size_t>(v)])
            inside += pg.weight[static_cast<std::size_t>(v)];
        else
            throw internal_error("off-cycle node sees both sides");
    }
    return {inside, outside};
}

VerificationReport check_cycle_weight_equivalence(const PerturbedGraph& pg) {
    VerificationReport rep;
    rep.name = "cycle_weight_equivalence";
    std::vector<long long> inside = dual_subtree_inside_weights(pg);
    const long long W = pg.total_weight;
    long long tested = 0;
    for (int e = 0; e < static_cast<int>(pg.edges.size()); ++e) {
        if (pg.edges[static_cast<std::size_t>(e)].cat == PerturbEdgeCat::Path) continue;
        ++tested;
        auto [fin, fout] = brute_force_cycle_weights(pg, e);
        long long cyc = fundamental_cycle_weight(pg, e);
        long long ain = inside[static_cast<std::size_t>(e)];
        long long aout = W - ain - cyc;
        if (fin != ain || fout != aout) {
            rep.fail("edge " + std::to_string(e) + ": accumulated " + std::to_string(ain) +
                     "/" + std::to_string(aout) + " vs flood " + std::to_string(fin) + "/" +
                     std::to_string(fout));
        }
        if (fin + fout + cyc != W)
            rep.fail("edge " + std::to_string(e) + ": weights do not partition the total");
    }
    rep.counts.emplace_back("non_tree_edges", tested);
    return rep;
}

}  // namespace udgsep
