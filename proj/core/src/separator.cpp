#include "udgsep/separator.hpp"

#include <algorithm>
#include <chrono>
#include <queue>
#include <set>

#include "udgsep/errors.hpp"

namespace udgsep {

namespace {

int tree_lca(const PerturbedGraph& pg, int a, int b) {
    if (a == pg.source_node || b == pg.source_node) return pg.source_node;
    if (pg.node_path[static_cast<std::size_t>(a)] == pg.node_path[static_cast<std::size_t>(b)])
        return pg.node_pos[static_cast<std::size_t>(a)] >= pg.node_pos[static_cast<std::size_t>(b)]
                   ? a
                   : b;
    return pg.source_node;
}

std::vector<int> tree_path(const PerturbedGraph& pg, int from, int to_ancestor) {
    std::vector<int> out;
    int cur = from;
    out.push_back(cur);
    while (cur != to_ancestor) {
        cur = pg.parent[static_cast<std::size_t>(cur)];
        if (cur == -1) throw internal_error("tree path missed its ancestor");
        out.push_back(cur);
    }
    return out;
}

}  // namespace

int cycle_root_face(const PerturbedGraph& pg) {
    for (std::size_t e = 0; e < pg.edges.size(); ++e)
        if (pg.edges[e].cat == PerturbEdgeCat::Outer)
            return pg.half_face[e * 2];
    return 0;
}

long long fundamental_cycle_weight(const PerturbedGraph& pg, int edge) {
    int a = pg.edges[static_cast<std::size_t>(edge)].a;
    int b = pg.edges[static_cast<std::size_t>(edge)].b;
    int l = tree_lca(pg, a, b);
    long long w = 0;
    for (int cur = a; cur != l; cur = pg.parent[static_cast<std::size_t>(cur)])
        w += pg.weight[static_cast<std::size_t>(cur)];
    for (int cur = b; cur != l; cur = pg.parent[static_cast<std::size_t>(cur)])
        w += pg.weight[static_cast<std::size_t>(cur)];
    return w + pg.weight[static_cast<std::size_t>(l)];
}

std::vector<long long> dual_subtree_inside_weights(const PerturbedGraph& pg) {
    const int nf = static_cast<int>(pg.face_halves.size());
    const int ne = static_cast<int>(pg.edges.size());
    const int root = cycle_root_face(pg);

    // dual tree spanned by the non-tree primal edges
    std::vector<std::vector<std::pair<int, int>>> dual(static_cast<std::size_t>(nf));
    int non_tree = 0;
    for (int e = 0; e < ne; ++e) {
        if (pg.edges[static_cast<std::size_t>(e)].cat == PerturbEdgeCat::Path) continue;
        ++non_tree;
        int f1 = pg.half_face[static_cast<std::size_t>(2 * e)];
        int f2 = pg.half_face[static_cast<std::size_t>(2 * e + 1)];
        dual[static_cast<std::size_t>(f1)].push_back({f2, e});
        dual[static_cast<std::size_t>(f2)].push_back({f1, e});
    }
    if (non_tree != nf - 1) throw internal_error("dual edges do not form a spanning tree");

    std::vector<int> fparent(static_cast<std::size_t>(nf), -2);
    std::vector<int> fdepth(static_cast<std::size_t>(nf), 0);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(nf));
    {
        std::queue<int> q;
        q.push(root);
        fparent[static_cast<std::size_t>(root)] = -1;
        while (!q.empty()) {
            int f = q.front();
            q.pop();
            order.push_back(f);
            for (auto [g, e] : dual[static_cast<std::size_t>(f)]) {
                if (fparent[static_cast<std::size_t>(g)] != -2) continue;
                fparent[static_cast<std::size_t>(g)] = f;
                fdepth[static_cast<std::size_t>(g)] = fdepth[static_cast<std::size_t>(f)] + 1;
                q.push(g);
            }
        }
    }
    if (static_cast<int>(order.size()) != nf) throw internal_error("dual tree disconnected");

    // binary lifting for face LCAs
    int logn = 1;
    while ((1 << logn) < nf) ++logn;
    std::vector<std::vector<int>> up(static_cast<std::size_t>(logn + 1),
                                     std::vector<int>(static_cast<std::size_t>(nf)));
    for (int f = 0; f < nf; ++f)
        up[0][static_cast<std::size_t>(f)] =
            fparent[static_cast<std::size_t>(f)] < 0 ? f : fparent[static_cast<std::size_t>(f)];
    for (int k = 1; k <= logn; ++k)
        for (int f = 0; f < nf; ++f)
            up[static_cast<std::size_t>(k)][static_cast<std::size_t>(f)] =
                up[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(
                    up[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(f)])];
    auto face_lca = [&](int a, int b) {
        if (fdepth[static_cast<std::size_t>(a)] < fdepth[static_cast<std::size_t>(b)]) std::swap(a, b);
        int diff = fdepth[static_cast<std::size_t>(a)] - fdepth[static_cast<std::size_t>(b)];
        for (int k = 0; k <= logn; ++k)
            if (diff & (1 << k)) a = up[static_cast<std::size_t>(k)][static_cast<std::size_t>(a)];
        if (a == b) return a;
        for (int k = logn; k >= 0; --k) {
            int ua = up[static_cast<std::size_t>(k)][static_cast<std::size_t>(a)];
            int ub = up[static_cast<std::size_t>(k)][static_cast<std::size_t>(b)];
            if (ua != ub) {
                a = ua;
                b = ub;
            }
        }
        return fparent[static_cast<std::size_t>(a)];
    };

    // Every perturbed node deposits its weight at the deepest face subtree
    // containing all of its corners; a subtree then encloses a node exactly
    // when it contains the node's deposit.
    std::vector<long long> deposit(static_cast<std::size_t>(nf), 0);
    {
        std::vector<int> glca(static_cast<std::size_t>(pg.node_count()), -1);
        for (int h = 0; h < 2 * ne; ++h) {
            int v = pg.half_tail(h);
            int f = pg.half_face[static_cast<std::size_t>(h)];
            int& cur = glca[static_cast<std::size_t>(v)];
            cur = cur == -1 ? f : face_lca(cur, f);
        }
        for (int v = 0; v < pg.node_count(); ++v) {
            if (pg.weight[static_cast<std::size_t>(v)] == 0) continue;
            if (glca[static_cast<std::size_t>(v)] == -1)
                throw internal_error("weighted node with no incident face");
            deposit[static_cast<std::size_t>(glca[static_cast<std::size_t>(v)])] +=
                pg.weight[static_cast<std::size_t>(v)];
        }
    }
    std::vector<long long> subtree = deposit;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int f = *it;
        if (fparent[static_cast<std::size_t>(f)] >= 0)
            subtree[static_cast<std::size_t>(fparent[static_cast<std::size_t>(f)])] +=
                subtree[static_cast<std::size_t>(f)];
    }

    std::vector<long long> inside(static_cast<std::size_t>(ne), -1);
    for (int e = 0; e < ne; ++e) {
        if (pg.edges[static_cast<std::size_t>(e)].cat == PerturbEdgeCat::Path) continue;
        int f1 = pg.half_face[static_cast<std::size_t>(2 * e)];
        int f2 = pg.half_face[static_cast<std::size_t>(2 * e + 1)];
        int child = fdepth[static_cast<std::size_t>(f1)] > fdepth[static_cast<std::size_t>(f2)] ? f1 : f2;
        inside[static_cast<std::size_t>(e)] = subtree[static_cast<std::size_t>(child)];
    }
    return inside;
}

FundamentalCycle find_balanced_fundamental_cycle(const PerturbedGraph& pg) {
    const int ne = static_cast<int>(pg.edges.size());
    std::vector<long long> inside = dual_subtree_inside_weights(pg);

    const long long W = pg.total_weight;
    FundamentalCycle best;
    bool found = false;
    for (int e = 0; e < ne && !found; ++e) {
        if (pg.edges[static_cast<std::size_t>(e)].cat == PerturbEdgeCat::Path) continue;
        long long in_w = inside[static_cast<std::size_t>(e)];
        long long cyc_w = fundamental_cycle_weight(pg, e);
        long long out_w = W - in_w - cyc_w;
        if (out_w < 0) throw internal_error("negative outside weight");
        if (3 * in_w <= 2 * W && 3 * out_w <= 2 * W) {
            int a = pg.edges[static_cast<std::size_t>(e)].a;
            int b = pg.edges[static_cast<std::size_t>(e)].b;
            int l = tree_lca(pg, a, b);
            best.apex_edge = e;
            best.inside_weight = in_w;
            best.outside_weight = out_w;
            best.left_nodes = tree_path(pg, a, pg.source_node);
            best.right_nodes = tree_path(pg, b, pg.source_node);
            std::vector<int> cyc = tree_path(pg, a, l);
            std::vector<int> other = tree_path(pg, b, l);
            other.pop_back();
            std::reverse(other.begin(), other.end());
            cyc.insert(cyc.end(), other.begin(), other.end());
            best.cycle_nodes = std::move(cyc);
            found = true;
        }
    }
    if (!found) throw internal_error("no balanced fundamental cycle exists");
    {
        std::set<int> uniq(best.cycle_nodes.begin(), best.cycle_nodes.end());
        if (uniq.size() != best.cycle_nodes.size())
            throw internal_error("fundamental cycle is not simple");
    }
    return best;
}

MappedCycle map_back_cycle(const FundamentalCycle& cycle, const PathSystem& ps,
                           const PerturbedGraph& pg, const AugmentedTriangulation& at) {
    const auto& apex = pg.edges[static_cast<std::size_t>(cycle.apex_edge)];
    if (apex.cat == PerturbEdgeCat::Path) throw internal_error("apex is a tree edge");

    MappedCycle out;
    out.apex_u = pg.node_original[static_cast<std::size_t>(apex.a)];
    out.apex_v = pg.node_original[static_cast<std::size_t>(apex.b)];
    if (out.apex_u == out.apex_v) {
        out.kind = ApexKind::SameVertex;
    } else if (at.is_outer_pair(out.apex_u, out.apex_v)) {
        out.kind = ApexKind::OuterEdge;
    } else {
        if (!at.base.has_edge(out.apex_u, out.apex_v))
            throw internal_error("apex pair is not an augmented edge");
        out.kind = ApexKind::DelaunayEdge;
    }

    auto suffix_of = [&](int node) -> std::vector<int> {
        if (node == pg.source_node) return {ps.source};
        int p = pg.node_path[static_cast<std::size_t>(node)];
        std::vector<int> full = materialize_path(ps, p);
        int pos = pg.node_pos[static_cast<std::size_t>(node)];
        return {full.begin() + pos, full.end()};
    };
    auto anchors_of = [&](int node) -> std::vector<int> {
        if (node == pg.source_node) return {ps.source};
        int p = pg.node_path[static_cast<std::size_t>(node)];
        return path_anchors(ps, p, pg.node_original[static_cast<std::size_t>(node)]);
    };

    out.suffix_u = suffix_of(apex.a);
    out.suffix_v = suffix_of(apex.b);
    out.sp_u = anchors_of(apex.a);
    out.sp_v = anchors_of(apex.b);
    return out;
}

std::vector<int> one_neighborhood_closure(const UnitDiskGraph& g,
                                          const std::vector<int>& sp_u,
                                          const std::vector<int>& sp_v,
                                          const std::vector<int>& apex_vertices) {
    std::vector<int> all = sp_u;
    all.insert(all.end(), sp_v.begin(), sp_v.end());
    all.insert(all.end(), apex_vertices.begin(), apex_vertices.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return closed_neighborhood(g, all);
}

namespace {

std::vector<std::vector<int>> components_without(const UnitDiskGraph& g,
                                                 const std::vector<int>& removed) {
    std::vector<char> gone(static_cast<std::size_t>(g.size()), 0);
    for (int v : removed) gone[static_cast<std::size_t>(v)] = 1;
    std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
    std::vector<std::vector<int>> comps;
    for (int v = 0; v < g.size(); ++v) {
        if (gone[static_cast<std::size_t>(v)] || seen[static_cast<std::size_t>(v)]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(v);
        seen[static_cast<std::size_t>(v)] = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            comp.push_back(x);
            for (int nb : g.neighbors(x)) {
                if (gone[static_cast<std::size_t>(nb)] || seen[static_cast<std::size_t>(nb)]) continue;
                seen[static_cast<std::size_t>(nb)] = 1;
                q.push(nb);
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

SeparatorResult compute_separator(const std::vector<Point>& points, std::optional<int> source,
                                  const SeparatorOptions& opts, PipelineArtifacts* artifacts) {
    auto t_total = std::chrono::steady_clock::now();
    SeparatorResult res;
    res.n = static_cast<int>(points.size());

    auto t0 = std::chrono::steady_clock::now();
    UnitDiskGraph g = UnitDiskGraph::build(points, opts.strict_threshold);
    res.timings.udg_ms = ms_since(t0);

    const int n = g.size();
    auto comps = components_without(g, {});
    long long bound = 2LL * n / 3;

    int big = -1;
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (static_cast<long long>(comps[i].size()) > bound) big = static_cast<int>(i);

    auto finish = [&](std::vector<int> separator) {
        std::sort(separator.begin(), separator.end());
        separator.erase(std::unique(separator.begin(), separator.end()), separator.end());
        res.separator_set = separator;
        res.components = components_without(g, res.separator_set);
        res.max_component = 0;
        for (const auto& c : res.components)
            res.max_component = std::max(res.max_component, static_cast<long long>(c.size()));
        res.balance = n == 0 ? 0.0 : static_cast<double>(res.max_component) / n;
        res.timings.total_ms = ms_since(t_total);
    };

    if (big == -1) {
        res.mode = SeparatorResult::Mode::NoBigComponent;
        finish({});
        return res;
    }

    const std::vector<int>& comp = comps[static_cast<std::size_t>(big)];

    if (comp.size() <= 2) {
        res.mode = SeparatorResult::Mode::TrivialSmall;
        res.source = comp[0];
        finish(comp);
        return res;
    }

    res.mode = SeparatorResult::Mode::Pipeline;
    int src_global = comp[0];
    if (source) {
        if (std::find(comp.begin(), comp.end(), *source) == comp.end())
            throw std::invalid_argument("source vertex not in the big component");
        src_global = *source;
    }
    res.source = src_global;

    // local subproblem on the big component
    std::vector<int> to_global = comp;  // sorted ascending
    std::vector<int> to_local(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < to_global.size(); ++i)
        to_local[static_cast<std::size_t>(to_global[i])] = static_cast<int>(i);
    std::vector<Point> local_pts;
    local_pts.reserve(to_global.size());
    for (int v : to_global) local_pts.push_back(points[static_cast<std::size_t>(v)]);

    t0 = std::chrono::steady_clock::now();
    UnitDiskGraph lg = UnitDiskGraph::build(local_pts, opts.strict_threshold);
    res.timings.udg_ms += ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    Triangulation tri = build_delaunay(local_pts);
    AugmentedTriangulation at = close_outer_face(tri);
    res.timings.delaunay_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    PathSystem ps = build_path_system(lg, tri, to_local[static_cast<std::size_t>(src_global)]);
    res.timings.pathsys_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    PerturbedGraph pg = perturb_and_triangulate(ps, at, lg);
    assign_weights(pg);
    res.timings.perturb_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    FundamentalCycle cyc = find_balanced_fundamental_cycle(pg);
    MappedCycle mapped = map_back_cycle(cyc, ps, pg, at);
    res.timings.cycle_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    std::vector<int> apex_vs{mapped.apex_u};
    if (mapped.apex_v != mapped.apex_u) apex_vs.push_back(mapped.apex_v);
    std::vector<int> sep_local =
        one_neighborhood_closure(lg, mapped.sp_u, mapped.sp_v, apex_vs);
    {
        std::set<int> sepset(sep_local.begin(), sep_local.end());
        for (int v : mapped.suffix_u)
            if (!sepset.count(v)) throw internal_error("suffix escapes the separator");
        for (int v : mapped.suffix_v)
            if (!sepset.count(v)) throw internal_error("suffix escapes the separator");
    }
    res.timings.closure_ms = ms_since(t0);

    auto lift = [&](const std::vector<int>& local) {
        std::vector<int> out;
        out.reserve(local.size());
        for (int v : local) out.push_back(to_global[static_cast<std::size_t>(v)]);
        return out;
    };
    res.apex_kind = mapped.kind;
    res.apex_u = to_global[static_cast<std::size_t>(mapped.apex_u)];
    res.apex_v = to_global[static_cast<std::size_t>(mapped.apex_v)];
    res.suffix_u = lift(mapped.suffix_u);
    res.suffix_v = lift(mapped.suffix_v);
    res.sp_u = lift(mapped.sp_u);
    res.sp_v = lift(mapped.sp_v);
    finish(lift(sep_local));

    if (artifacts) {
        artifacts->ran = true;
        artifacts->to_global = to_global;
        artifacts->local_graph = std::move(lg);
        artifacts->tri = std::move(tri);
        artifacts->at = std::move(at);
        artifacts->ps = std::move(ps);
        artifacts->pg = std::move(pg);
        artifacts->cycle = std::move(cyc);
        artifacts->mapped = std::move(mapped);
    }
    return res;
}

}  // namespace udgsep
