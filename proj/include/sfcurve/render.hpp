#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sfcurve/chain.hpp"

namespace sfcurve {

using Polyline = std::vector<Complex>;

/// One polyline per vertex; the first point is the pattern's initial point
/// a_j and the last its terminate point b_j.
struct InitialPattern {
    std::vector<Polyline> per_vertex;
};

/// Head-to-tail segment per vertex, collapsed to the single point head(j)
/// when head and tail coincide.
InitialPattern default_pattern(const OrderedGifs& g, const HeadTailTable& ht);

/// Single point (head(j) + tail(j)) / 2 per vertex.
InitialPattern midpoint_pattern(const OrderedGifs& g, const HeadTailTable& ht);

/// Affine shrink of every per-vertex polyline toward the midpoint of its
/// endpoints: endpoints move inward by eps. Collapses to the midpoint when
/// the pattern is shorter than 2*eps.
InitialPattern shrink_pattern(const InitialPattern& pat, double eps);

/// n-th approximation of the curve of E_j: the depth-n cylinders in
/// dictionary order, each contributing its mapped pattern, joined by the
/// implicit connector segments. Zero-length connectors are dropped (no
/// duplicated points).
Polyline approximate(const OrderedGifs& g, const InitialPattern& pat, int j, int n,
                     const EnumLimits& lim = {});

struct PolylineStyle {
    std::string stroke = "#205295";
};

/// Deterministic SVG document: one path element per polyline, auto viewBox
/// with 2% margin, stroke width 0.15% of the bounding-box diagonal,
/// coordinates at 6 significant digits, imaginary axis pointing up.
std::string to_svg(const std::vector<std::pair<Polyline, PolylineStyle>>& items);

void write_svg(const std::string& path,
               const std::vector<std::pair<Polyline, PolylineStyle>>& items);

/// Evenly spaced hue for strand k of n, as #rrggbb.
std::string strand_color(int k, int n);

}  // namespace sfcurve
