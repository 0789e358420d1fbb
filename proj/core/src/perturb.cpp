#include "udgsep/perturb.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>

#include "udgsep/errors.hpp"

namespace udgsep {

namespace {

struct Slot {
    int path;
    int neighbor;   // the corridor's other endpoint
    bool outgoing;  // strand travels vertex -> neighbor
};

// Attachment sort keys: position around the vertex's circle of slots.
// tie: -1 vertex-edge hugging before the slot, 0 the path edge itself,
// 1 outer-closure edges, 2 vertex-edge hugging after the slot.
struct AttachKey {
    int slot;
    int tie;
    int sub;
    bool operator<(const AttachKey& o) const {
        return std::tie(slot, tie, sub) < std::tie(o.slot, o.tie, o.sub);
    }
};

}  // namespace

PerturbedGraph perturb_and_triangulate(const PathSystem& ps,
                                       const AugmentedTriangulation& at,
                                       const UnitDiskGraph& g) {
    const int n = g.size();
    const int s = ps.source;
    const Triangulation& tri = at.base;

    PerturbedGraph pg;

    // routes
    std::vector<std::vector<int>> routes(static_cast<std::size_t>(n));
    std::vector<std::unordered_map<int, int>> rpos(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
        routes[static_cast<std::size_t>(p)] = materialize_path(ps, p);
        const auto& r = routes[static_cast<std::size_t>(p)];
        for (std::size_t i = 0; i < r.size(); ++i)
            rpos[static_cast<std::size_t>(p)][r[i]] = static_cast<int>(i);
    }

    // nodes: one copy per (vertex, visiting path), plus the bare source
    std::vector<std::unordered_map<int, int>> node_of(static_cast<std::size_t>(n));  // per vertex: path -> node
    pg.path_nodes.assign(static_cast<std::size_t>(n), {});
    for (int p = 0; p < n; ++p) {
        if (p == s) continue;
        const auto& r = routes[static_cast<std::size_t>(p)];
        for (std::size_t i = 0; i + 1 < r.size(); ++i) {
            int id = pg.node_count();
            pg.node_original.push_back(r[i]);
            pg.node_path.push_back(p);
            pg.node_pos.push_back(static_cast<int>(i));
            node_of[static_cast<std::size_t>(r[i])][p] = id;
            pg.path_nodes[static_cast<std::size_t>(p)].push_back(id);
        }
    }
    pg.source_node = pg.node_count();
    pg.node_original.push_back(s);
    pg.node_path.push_back(-1);
    pg.node_pos.push_back(0);

    // attachments collected per node, sorted into rotations afterwards
    std::vector<std::vector<std::pair<AttachKey, int>>> attach(
        static_cast<std::size_t>(pg.node_count()));

    auto add_edge = [&](int a, int b, PerturbEdgeCat cat) -> int {
        int id = static_cast<int>(pg.edges.size());
        pg.edges.push_back({a, b, cat});
        return id;
    };

    // path edges + spider tree
    pg.parent.assign(static_cast<std::size_t>(pg.node_count()), -1);
    pg.parent_edge.assign(static_cast<std::size_t>(pg.node_count()), -1);
    for (int p = 0; p < n; ++p) {
        const auto& chain = pg.path_nodes[static_cast<std::size_t>(p)];
        for (std::size_t i = 0; i < chain.size(); ++i) {
            int a = chain[i];
            int bnode = i + 1 < chain.size() ? chain[i + 1] : pg.source_node;
            int e = add_edge(a, bnode, PerturbEdgeCat::Path);
            pg.parent[static_cast<std::size_t>(a)] = bnode;
            pg.parent_edge[static_cast<std::size_t>(a)] = e;
        }
    }

    // hull helpers for the gap position of outer edges
    const auto& hull = tri.hull;
    const int h = static_cast<int>(hull.size());
    std::vector<int> hull_next(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < h; ++i)
        hull_next[static_cast<std::size_t>(hull[static_cast<std::size_t>(i)])] =
            hull[static_cast<std::size_t>((i + 1) % h)];

    // circle of slots per vertex; hull rings rotate to start at the hull
    // successor so the outside gap falls after the last slot
    std::vector<std::vector<Slot>> circle(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        std::vector<int> ring = tri.rotation[static_cast<std::size_t>(v)];
        if (hull_next[static_cast<std::size_t>(v)] != -1) {
            auto it = std::find(ring.begin(), ring.end(), hull_next[static_cast<std::size_t>(v)]);
            if (it == ring.end()) throw internal_error("hull successor missing from ring");
            std::rotate(ring.begin(), it, ring.end());
        }
        for (int z : ring) {
            auto cit = ps.corridors.find({std::min(v, z), std::max(v, z)});
            if (cit == ps.corridors.end()) continue;
            const auto& lanes = cit->second;
            const int sz = static_cast<int>(lanes.size());
            for (int view = 0; view < sz; ++view) {
                int stored = v <= z ? view : sz - 1 - view;
                int path = lanes[static_cast<std::size_t>(stored)];
                int p_at = rpos[static_cast<std::size_t>(path)].at(v);
                const auto& r = routes[static_cast<std::size_t>(path)];
                bool outgoing;
                if (p_at + 1 < static_cast<int>(r.size()) &&
                    r[static_cast<std::size_t>(p_at + 1)] == z)
                    outgoing = true;
                else if (p_at > 0 && r[static_cast<std::size_t>(p_at - 1)] == z)
                    outgoing = false;
                else
                    throw internal_error("corridor strand does not pass the vertex");
                circle[static_cast<std::size_t>(v)].push_back({path, z, outgoing});
            }
        }
    }

    auto node_at = [&](int v, int path) -> int {
        if (v == s) return pg.source_node;
        return node_of[static_cast<std::size_t>(v)].at(path);
    };

    // path-edge attachments keyed by slot positions
    for (int v = 0; v < n; ++v) {
        const auto& slots = circle[static_cast<std::size_t>(v)];
        for (std::size_t k = 0; k < slots.size(); ++k) {
            const Slot& sl = slots[k];
            int nd = node_at(v, sl.path);
            // the path edge crossing this slot
            const auto& chain = pg.path_nodes[static_cast<std::size_t>(sl.path)];
            int p_at = rpos[static_cast<std::size_t>(sl.path)].at(v);
            int eid;
            if (sl.outgoing) {
                eid = pg.parent_edge[static_cast<std::size_t>(chain[static_cast<std::size_t>(p_at)])];
            } else {
                eid = pg.parent_edge[static_cast<std::size_t>(chain[static_cast<std::size_t>(p_at - 1)])];
            }
            const auto& e = pg.edges[static_cast<std::size_t>(eid)];
            int half = 2 * eid + (e.a == nd ? 0 : 1);
            if (pg.half_tail(half) != nd) throw internal_error("half orientation mixup");
            attach[static_cast<std::size_t>(nd)].push_back(
                {{static_cast<int>(k), 0, 0}, half});
        }
    }

    // vertex edges between circularly consecutive slots of distinct paths
    for (int v = 0; v < n; ++v) {
        if (v == s) continue;  // the source stays a single node
        const auto& slots = circle[static_cast<std::size_t>(v)];
        const int k = static_cast<int>(slots.size());
        if (k < 2) continue;
        std::set<std::pair<int, int>> seen;
        for (int i = 0; i < k; ++i) {
            int j = (i + 1) % k;
            if (slots[static_cast<std::size_t>(i)].path == slots[static_cast<std::size_t>(j)].path)
                continue;
            int a = node_at(v, slots[static_cast<std::size_t>(i)].path);
            int bnode = node_at(v, slots[static_cast<std::size_t>(j)].path);
            auto key = std::minmax(a, bnode);
            if (!seen.insert({key.first, key.second}).second) continue;
            int eid = add_edge(a, bnode, PerturbEdgeCat::Vertex);
            attach[static_cast<std::size_t>(a)].push_back({{i, 2, 0}, 2 * eid});
            attach[static_cast<std::size_t>(bnode)].push_back({{j, -1, 0}, 2 * eid + 1});
        }
    }

    // One realization edge for every augmented edge that carries no strand:
    // unused Delaunay edges get a faithful edge routed through their empty
    // ribbon, and the outer-closure edges attach through the hull gap. Each
    // end anchors at the copy owning the nearest slot before the edge's
    // rotational position, keyed into the gap after that slot.
    {
        struct EndPoint {
            int node;
            AttachKey key;
        };
        std::map<std::pair<int, int>, std::vector<EndPoint>> pending;

        for (int v = 0; v < n; ++v) {
            std::vector<int> ring = tri.rotation[static_cast<std::size_t>(v)];
            if (hull_next[static_cast<std::size_t>(v)] != -1) {
                auto it =
                    std::find(ring.begin(), ring.end(), hull_next[static_cast<std::size_t>(v)]);
                std::rotate(ring.begin(), it, ring.end());
            }
            const auto& slots = circle[static_cast<std::size_t>(v)];
            if (slots.empty()) throw internal_error("vertex with no strand slots");
            int last_anchor = -1;
            int slot_idx = 0;
            int seq = 0;
            std::vector<int> prefix;  // unused edges before the first slot
            auto emit = [&](int z, int anchor) {
                int nd = v == s ? pg.source_node
                                : node_at(v, slots[static_cast<std::size_t>(anchor)].path);
                auto key = std::minmax(v, z);
                pending[{key.first, key.second}].push_back({nd, AttachKey{anchor, 1, seq++}});
            };
            for (int z : ring) {
                auto cit = ps.corridors.find({std::min(v, z), std::max(v, z)});
                bool used = cit != ps.corridors.end() && !cit->second.empty();
                if (used) {
                    slot_idx += static_cast<int>(cit->second.size());
                    last_anchor = slot_idx - 1;
                } else if (last_anchor >= 0) {
                    emit(z, last_anchor);
                } else {
                    prefix.push_back(z);
                }
            }
            int final_anchor = static_cast<int>(slots.size()) - 1;
            for (int z : at.outer_at[static_cast<std::size_t>(v)]) emit(z, final_anchor);
            for (int z : prefix) emit(z, final_anchor);
        }

        for (auto& [edge, ends] : pending) {
            if (ends.size() != 2) throw internal_error("realization edge without two ends");
            bool outer = at.is_outer_pair(edge.first, edge.second);
            int eid = add_edge(ends[0].node, ends[1].node,
                               outer ? PerturbEdgeCat::Outer : PerturbEdgeCat::Tri);
            attach[static_cast<std::size_t>(ends[0].node)].push_back({ends[0].key, 2 * eid});
            attach[static_cast<std::size_t>(ends[1].node)].push_back({ends[1].key, 2 * eid + 1});
        }
    }

    // rotations
    pg.rotation.assign(static_cast<std::size_t>(pg.node_count()), {});
    for (int nd = 0; nd < pg.node_count(); ++nd) {
        auto& list = attach[static_cast<std::size_t>(nd)];
        std::sort(list.begin(), list.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        for (const auto& [key, half] : list)
            pg.rotation[static_cast<std::size_t>(nd)].push_back(half);
    }

    // face traversal: next half of h is the predecessor of reverse(h) in the
    // rotation at head(h); bounded faces trace counterclockwise
    auto face_next = [&](int half) -> int {
        int v = pg.half_head(half);
        int rev = PerturbedGraph::reverse_half(half);
        const auto& ring = pg.rotation[static_cast<std::size_t>(v)];
        auto it = std::find(ring.begin(), ring.end(), rev);
        if (it == ring.end()) throw internal_error("reverse half missing from rotation");
        std::size_t idx = static_cast<std::size_t>(it - ring.begin());
        return ring[(idx + ring.size() - 1) % ring.size()];
    };

    auto trace_all_faces = [&]() {
        pg.face_halves.clear();
        pg.half_face.assign(pg.edges.size() * 2, -1);
        for (int h0 = 0; h0 < static_cast<int>(pg.edges.size()) * 2; ++h0) {
            if (pg.half_face[static_cast<std::size_t>(h0)] != -1) continue;
            int fid = static_cast<int>(pg.face_halves.size());
            std::vector<int> cyc;
            int hcur = h0;
            do {
                pg.half_face[static_cast<std::size_t>(hcur)] = fid;
                cyc.push_back(hcur);
                hcur = face_next(hcur);
            } while (hcur != h0);
            pg.face_halves.push_back(std::move(cyc));
        }
    };

    trace_all_faces();

    // triangulate every larger face by ear clipping with faithful or
    // same-vertex chords only
    auto chord_ok = [&](int na, int nb) -> bool {
        if (na == nb) return false;
        int oa = pg.node_original[static_cast<std::size_t>(na)];
        int ob = pg.node_original[static_cast<std::size_t>(nb)];
        if (oa == ob) return true;
        auto key = std::minmax(oa, ob);
        return at.edge_index.count({key.first, key.second}) != 0;
    };

    std::vector<std::vector<int>> big_faces;
    for (auto& f : pg.face_halves)
        if (f.size() > 3) big_faces.push_back(f);
    // deterministic processing order
    std::sort(big_faces.begin(), big_faces.end(),
              [](const auto& x, const auto& y) { return x[0] < y[0]; });

    auto insert_after = [&](int node, int ref_half, int new_half) {
        auto& ring = pg.rotation[static_cast<std::size_t>(node)];
        auto it = std::find(ring.begin(), ring.end(), ref_half);
        if (it == ring.end()) throw internal_error("rotation reference missing");
        ring.insert(it + 1, new_half);
    };

    for (auto& poly : big_faces) {
        while (poly.size() > 3) {
            bool clipped = false;
            for (std::size_t i = 0; i < poly.size() && !clipped; ++i) {
                int ha = poly[i];
                int hb = poly[(i + 1) % poly.size()];
                int ca = pg.half_tail(ha);
                int cc = pg.half_head(hb);
                if (!chord_ok(ca, cc)) continue;
                int oa = pg.node_original[static_cast<std::size_t>(ca)];
                int oc = pg.node_original[static_cast<std::size_t>(cc)];
                PerturbEdgeCat cat =
                    oa == oc ? PerturbEdgeCat::Vertex : PerturbEdgeCat::Tri;
                int eid = add_edge(ca, cc, cat);
                int q = 2 * eid;        // ca -> cc
                int qr = 2 * eid + 1;   // cc -> ca
                // chord enters each corner's rotation right after the
                // corner's outgoing boundary half
                insert_after(ca, ha, q);
                int hnext = poly[(i + 2) % poly.size()];
                insert_after(cc, hnext, qr);
                // remaining polygon swaps the two clipped halves for q
                std::vector<int> next_poly;
                for (std::size_t t = 0; t < poly.size(); ++t) {
                    if (t == i) {
                        next_poly.push_back(q);
                    } else if (t == (i + 1) % poly.size()) {
                        // dropped
                    } else {
                        next_poly.push_back(poly[t]);
                    }
                }
                poly = std::move(next_poly);
                clipped = true;
            }
            if (!clipped) {
                std::string corners;
                for (int hh : poly) {
                    int t = pg.half_tail(hh);
                    corners += " " +
                               std::to_string(pg.node_original[static_cast<std::size_t>(t)]);
                }
                throw internal_error(
                    "face cannot be triangulated with faithful or same-vertex chords; "
                    "corner originals:" + corners);
            }
        }
    }

    trace_all_faces();
    for (const auto& f : pg.face_halves)
        if (f.size() != 3) throw internal_error("non-triangle face after completion");
    long long V = pg.node_count(), E = static_cast<long long>(pg.edges.size()),
              F = static_cast<long long>(pg.face_halves.size());
    if (V - E + F != 2) throw internal_error("perturbed graph is not planar");

    pg.weight.assign(static_cast<std::size_t>(pg.node_count()), 0);
    pg.total_weight = 0;
    return pg;
}

void assign_weights(PerturbedGraph& pg) {
    std::fill(pg.weight.begin(), pg.weight.end(), 0);
    for (std::size_t p = 0; p < pg.path_nodes.size(); ++p) {
        const auto& chain = pg.path_nodes[p];
        if (chain.empty()) continue;  // the source's own record
        pg.weight[static_cast<std::size_t>(chain[0])] = 1;
    }
    pg.weight[static_cast<std::size_t>(pg.source_node)] = 1;
    pg.total_weight = 0;
    for (long long w : pg.weight) pg.total_weight += w;
}

}  // namespace udgsep
