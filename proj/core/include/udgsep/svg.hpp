#pragma once

// Layered SVG rendering: unit disks, graph edges, Delaunay edges, the path
// system with exact combinatorial strand offsets, the separator highlight.
// Outer-closure edges are never drawn.

#include <string>

#include "udgsep/report.hpp"

namespace udgsep {

struct SvgOptions {
    bool disks = true;
    bool udg_edges = true;
    bool delaunay_edges = true;
    bool paths = true;
    bool highlight = true;
    bool separator = true;
};

/// Strand polylines in exact coordinates: every path of the system offset by
/// its corridor lanes, with the offset bounded by a quarter of the smallest
/// feature distance so the drawn polylines cannot cross. Exposed for the
/// renderer and for the exact post-render check.
std::vector<std::vector<Point>> strand_polylines(const PathSystem& ps,
                                                 const UnitDiskGraph& g,
                                                 const Triangulation& tri);

std::string render_svg(const RunReport& rep, const std::vector<Point>& points,
                       const SvgOptions& opts = {});

}  // namespace udgsep
