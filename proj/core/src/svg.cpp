#include "udgsep/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "udgsep/errors.hpp"

namespace udgsep {

std::vector<std::vector<Point>> strand_polylines(const PathSystem& ps, const UnitDiskGraph& g,
                                                 const Triangulation& tri) {
    const int n = g.size();

    // exact feature bound: smallest site-pair distance and smallest
    // site-to-nonincident-corridor-edge distance
    Rat min_sq(-1);
    auto consider = [&](const Rat& d2) {
        if (sgn(d2) == 0) throw internal_error("coincident feature while rendering");
        if (min_sq < 0 || d2 < min_sq) min_sq = d2;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) consider(sq_dist(g.point(i), g.point(j)));
    for (const auto& [edge, lanes] : ps.corridors) {
        if (lanes.empty()) continue;
        for (int v = 0; v < n; ++v) {
            if (v == edge.first || v == edge.second) continue;
            consider(seg_point_sqdist(g.point(edge.first), g.point(edge.second), g.point(v)));
        }
    }
    if (min_sq < 0) min_sq = Rat(1);
    Rat eps = rat_sqrt_lower(min_sq) / 8;
    if (sgn(eps) == 0) throw internal_error("degenerate feature distance");

    // Every strand point at a vertex sits exactly on a circle of radius eps,
    // placed by the rational parametrization t -> ((1-t^2), 2t) / (1+t^2).
    // tan(theta/2) is monotone, so ordering slots by t is ordering them by
    // angle; points on a strict circle make non-interleaved chords exactly
    // non-crossing.
    auto circle_point = [&](const Point& center, const Rat& t) -> Point {
        Rat den = 1 + t * t;
        return Point(center.x + eps * (1 - t * t) / den, center.y + eps * 2 * t / den);
    };

    // slot parameter per (vertex, edge, lane)
    std::map<std::pair<int, int>, std::map<int, Rat>> slot_t;  // (v, neighbor) -> lane -> t
    for (int v = 0; v < n; ++v) {
        const Point& pv = g.point(v);
        struct Arc {
            int z;
            Rat t;
            int lanes;
            bool at_pi;
        };
        std::vector<Arc> arcs;
        for (int z : tri.rotation[static_cast<std::size_t>(v)]) {
            auto cit = ps.corridors.find({std::min(v, z), std::max(v, z)});
            if (cit == ps.corridors.end() || cit->second.empty()) continue;
            Rat dx = g.point(z).x - pv.x, dy = g.point(z).y - pv.y;
            Rat len = rat_sqrt_lower(dx * dx + dy * dy);
            Rat t(0);
            bool at_pi = false;
            if (sgn(dy) != 0) {
                if (sgn(dx) > 0)
                    t = dy / (len + dx);
                else
                    t = (len - dx) / dy;
            } else if (sgn(dx) <= 0) {
                at_pi = true;  // the -x direction comes after every finite t
            }
            arcs.push_back({z, t, static_cast<int>(cit->second.size()), at_pi});
        }
        if (arcs.empty()) continue;
        Rat tmax(0);
        for (const Arc& a : arcs)
            if (!a.at_pi && a.t > tmax) tmax = a.t;
        for (Arc& a : arcs)
            if (a.at_pi) a.t = tmax + 2;
        std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return a.t < b.t; });
        for (std::size_t i = 1; i < arcs.size(); ++i)
            if (!(arcs[i - 1].t < arcs[i].t))
                throw internal_error("slot directions collapsed while rendering");
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            Rat gap_lo = i == 0 ? Rat(1) : (arcs[i].t - arcs[i - 1].t) / 2;
            Rat gap_hi = i + 1 == arcs.size() ? Rat(1) : (arcs[i + 1].t - arcs[i].t) / 2;
            Rat spread = std::min(gap_lo, gap_hi) / (arcs[i].lanes + 1);
            auto& per_lane = slot_t[{v, arcs[i].z}];
            for (int j = 0; j < arcs[i].lanes; ++j)
                per_lane[j] = arcs[i].t + spread * Rat(2 * j - (arcs[i].lanes - 1)) / 2;
        }
    }

    auto lane_view = [&](int v, int z, int path) -> int {
        int lo = std::min(v, z), hi = std::max(v, z);
        const auto& lanes = ps.corridor(lo, hi);
        auto it = std::find(lanes.begin(), lanes.end(), path);
        if (it == lanes.end()) throw internal_error("strand missing while rendering");
        int stored = static_cast<int>(it - lanes.begin());
        return v <= z ? stored : static_cast<int>(lanes.size()) - 1 - stored;
    };
    auto slot_point = [&](int v, int z, int path) -> Point {
        return circle_point(g.point(v), slot_t.at({v, z}).at(lane_view(v, z, path)));
    };

    std::vector<std::vector<Point>> out(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
        if (p == ps.source) {
            out[static_cast<std::size_t>(p)] = {g.point(p)};
            continue;
        }
        std::vector<int> route = materialize_path(ps, p);
        std::vector<Point>& poly = out[static_cast<std::size_t>(p)];
        poly.push_back(slot_point(route[0], route[1], p));
        for (std::size_t i = 1; i + 1 < route.size(); ++i) {
            poly.push_back(slot_point(route[i], route[i - 1], p));
            poly.push_back(slot_point(route[i], route[i + 1], p));
        }
        // the final hop runs to the source point itself
        poly.push_back(slot_point(route[route.size() - 1], route[route.size() - 2], p));
        poly.push_back(g.point(route.back()));
    }
    return out;
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string coord(const Point& p) {
    // SVG y grows downward; flip to keep the drawing upright
    return fmt(rat_to_double(p.x)) + "," + fmt(-rat_to_double(p.y));
}

}  // namespace

std::string render_svg(const RunReport& rep, const std::vector<Point>& points,
                       const SvgOptions& opts) {
    double minx = 0, miny = 0, maxx = 1, maxy = 1;
    if (!points.empty()) {
        minx = maxx = rat_to_double(points[0].x);
        miny = maxy = rat_to_double(points[0].y);
        for (const auto& p : points) {
            minx = std::min(minx, rat_to_double(p.x));
            maxx = std::max(maxx, rat_to_double(p.x));
            miny = std::min(miny, rat_to_double(p.y));
            maxy = std::max(maxy, rat_to_double(p.y));
        }
    }
    const double pad = 0.8;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(minx - pad) << " "
       << fmt(-maxy - pad) << " " << fmt(maxx - minx + 2 * pad) << " "
       << fmt(maxy - miny + 2 * pad) << "\">\n";

    UnitDiskGraph g = UnitDiskGraph::build(points, rep.flags.strict_threshold);

    if (opts.disks) {
        os << "<g id=\"disks\" fill=\"#9ecae1\" fill-opacity=\"0.25\" stroke=\"none\">\n";
        for (const auto& p : points)
            os << "  <circle cx=\"" << fmt(rat_to_double(p.x)) << "\" cy=\""
               << fmt(-rat_to_double(p.y)) << "\" r=\"0.5\"/>\n";
        os << "</g>\n";
    }
    if (opts.udg_edges) {
        os << "<g id=\"udg-edges\" stroke=\"#bbbbbb\" stroke-width=\"0.01\">\n";
        for (int v = 0; v < g.size(); ++v)
            for (int nb : g.neighbors(v))
                if (nb > v)
                    os << "  <line x1=\"" << fmt(rat_to_double(g.point(v).x)) << "\" y1=\""
                       << fmt(-rat_to_double(g.point(v).y)) << "\" x2=\""
                       << fmt(rat_to_double(g.point(nb).x)) << "\" y2=\""
                       << fmt(-rat_to_double(g.point(nb).y)) << "\"/>\n";
        os << "</g>\n";
    }
    if (opts.delaunay_edges) {
        os << "<g id=\"delaunay-edges\" stroke=\"#74c476\" stroke-width=\"0.015\" fill=\"none\">\n";
        if (rep.artifacts.ran) {
            const auto& tri = rep.artifacts.tri;
            for (const auto& [a, b] : tri.edges)
                os << "  <line x1=\"" << fmt(rat_to_double(tri.site(a).x)) << "\" y1=\""
                   << fmt(-rat_to_double(tri.site(a).y)) << "\" x2=\""
                   << fmt(rat_to_double(tri.site(b).x)) << "\" y2=\""
                   << fmt(-rat_to_double(tri.site(b).y)) << "\"/>\n";
        }
        os << "</g>\n";
    }
    if (opts.paths) {
        os << "<g id=\"paths\" stroke=\"#3182bd\" stroke-width=\"0.012\" fill=\"none\">\n";
        if (rep.artifacts.ran) {
            auto polys =
                strand_polylines(rep.artifacts.ps, rep.artifacts.local_graph, rep.artifacts.tri);
            for (const auto& poly : polys) {
                if (poly.size() < 2) continue;
                os << "  <polyline points=\"";
                for (const auto& p : poly) os << coord(p) << " ";
                os << "\"/>\n";
            }
        }
        os << "</g>\n";
    }
    if (opts.highlight) {
        os << "<g id=\"highlight\" stroke=\"#e6550d\" stroke-width=\"0.03\" fill=\"none\">\n";
        if (rep.result.apex_kind) {
            auto draw_suffix = [&](const std::vector<int>& suf) {
                if (suf.size() < 2) return;
                os << "  <polyline points=\"";
                for (int v : suf) os << coord(points[static_cast<std::size_t>(v)]) << " ";
                os << "\"/>\n";
            };
            draw_suffix(rep.result.suffix_u);
            draw_suffix(rep.result.suffix_v);
            if (*rep.result.apex_kind == ApexKind::DelaunayEdge) {
                const Point& a = points[static_cast<std::size_t>(rep.result.apex_u)];
                const Point& b = points[static_cast<std::size_t>(rep.result.apex_v)];
                os << "  <line stroke-dasharray=\"0.05,0.03\" x1=\"" << fmt(rat_to_double(a.x))
                   << "\" y1=\"" << fmt(-rat_to_double(a.y)) << "\" x2=\""
                   << fmt(rat_to_double(b.x)) << "\" y2=\"" << fmt(-rat_to_double(b.y))
                   << "\"/>\n";
            }
        }
        os << "</g>\n";
    }
    if (opts.separator) {
        os << "<g id=\"separator\" fill=\"#e6550d\" fill-opacity=\"0.35\" stroke=\"none\">\n";
        for (int v : rep.result.separator_set) {
            const Point& p = points[static_cast<std::size_t>(v)];
            os << "  <circle cx=\"" << fmt(rat_to_double(p.x)) << "\" cy=\""
               << fmt(-rat_to_double(p.y)) << "\" r=\"0.5\"/>\n";
        }
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace udgsep
