#include "sfcurve/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

namespace sfcurve {

namespace {

double eq_scale(Complex a, Complex b) { return std::max({1.0, std::abs(a), std::abs(b)}); }

void check_pattern(const OrderedGifs& g, const InitialPattern& pat) {
    if (static_cast<int>(pat.per_vertex.size()) != g.vertex_count())
        throw Error("pattern: one polyline per vertex required");
    for (const Polyline& pl : pat.per_vertex) {
        if (pl.empty()) throw Error("pattern: polylines must be non-empty");
    }
}

std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

InitialPattern default_pattern(const OrderedGifs& g, const HeadTailTable& ht) {
    InitialPattern pat;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const Complex h = ht[v].head, t = ht[v].tail;
        if (std::abs(h - t) < 1e-12 * eq_scale(h, t))
            pat.per_vertex.push_back({h});
        else
            pat.per_vertex.push_back({h, t});
    }
    return pat;
}

InitialPattern midpoint_pattern(const OrderedGifs& g, const HeadTailTable& ht) {
    InitialPattern pat;
    for (int v = 0; v < g.vertex_count(); ++v)
        pat.per_vertex.push_back({0.5 * (ht[v].head + ht[v].tail)});
    return pat;
}

InitialPattern shrink_pattern(const InitialPattern& pat, double eps) {
    if (eps < 0.0) throw Error("shrink: eps must be >= 0");
    InitialPattern out;
    for (const Polyline& pl : pat.per_vertex) {
        if (pl.empty()) throw Error("pattern: polylines must be non-empty");
        const Complex a = pl.front(), b = pl.back();
        const Complex m = 0.5 * (a + b);
        const double len = std::abs(b - a);
        if (len <= 2.0 * eps || len == 0.0) {
            out.per_vertex.push_back({m});
            continue;
        }
        const double s = (len - 2.0 * eps) / len;
        Polyline shrunk;
        shrunk.reserve(pl.size());
        for (Complex z : pl) shrunk.push_back(m + s * (z - m));
        out.per_vertex.push_back(std::move(shrunk));
    }
    return out;
}

Polyline approximate(const OrderedGifs& g, const InitialPattern& pat, int j, int n,
                     const EnumLimits& lim) {
    check_pattern(g, pat);
    if (j < 0 || j >= g.vertex_count()) throw Error("approximate: vertex out of range");
    if (n < 0) throw Error("approximate: depth must be >= 0");
    if (n == 0) return pat.per_vertex[static_cast<std::size_t>(j)];

    Polyline out;
    for_each_path(g, j, n, lim, [&](const std::vector<int>&, int term, const Similitude& m) {
        for (Complex p : pat.per_vertex[static_cast<std::size_t>(term)]) {
            const Complex q = m(p);
            if (!out.empty() && std::abs(q - out.back()) <= 1e-12 * eq_scale(q, out.back()))
                continue;  // zero-length connector (or degenerate pattern step)
            out.push_back(q);
        }
    });
    return out;
}

std::string to_svg(const std::vector<std::pair<Polyline, PolylineStyle>>& items) {
    if (items.empty()) throw Error("to_svg: nothing to draw");
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& [pl, style] : items) {
        if (pl.empty()) throw Error("to_svg: empty polyline");
        for (Complex z : pl) {
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                throw Error("to_svg: non-finite coordinate");
            xmin = std::min(xmin, z.real());
            xmax = std::max(xmax, z.real());
            ymin = std::min(ymin, -z.imag());  // flip so positive imaginary is up
            ymax = std::max(ymax, -z.imag());
        }
    }
    double w = xmax - xmin, h = ymax - ymin;
    double span = std::max(w, h);
    if (span == 0.0) span = 1.0;
    const double margin = 0.02 * span;
    double diag = std::hypot(w, h);
    if (diag == 0.0) diag = span;
    const double stroke = 0.0015 * diag;

    std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fmt6(xmin - margin) + " " +
           fmt6(ymin - margin) + " " + fmt6(w + 2 * margin) + " " + fmt6(h + 2 * margin) + "\">\n";
    for (const auto& [pl, style] : items) {
        svg += "<path fill=\"none\" stroke=\"" + style.stroke + "\" stroke-width=\"" +
               fmt6(stroke) + "\" stroke-linejoin=\"round\" stroke-linecap=\"round\" d=\"";
        for (std::size_t i = 0; i < pl.size(); ++i) {
            svg += i == 0 ? "M " : " L ";
            svg += fmt6(pl[i].real()) + " " + fmt6(-pl[i].imag());
        }
        svg += "\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

void write_svg(const std::string& path,
               const std::vector<std::pair<Polyline, PolylineStyle>>& items) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << to_svg(items);
    if (!out) throw Error("failed writing '" + path + "'");
}

std::string strand_color(int k, int n) {
    n = std::max(n, 1);
    const double hue = 360.0 * (k % n) / n;
    const double sat = 0.65, val = 0.78;
    const double c = val * sat;
    const double hp = hue / 60.0;
    const double x = c * (1.0 - std::abs(std::fmod(hp, 2.0) - 1.0));
    double r = 0, g = 0, b = 0;
    switch (static_cast<int>(hp)) {
        case 0: r = c, g = x; break;
        case 1: r = x, g = c; break;
        case 2: g = c, b = x; break;
        case 3: g = x, b = c; break;
        case 4: r = x, b = c; break;
        default: r = c, b = x; break;
    }
    const double m = val - c;
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", static_cast<int>(std::lround((r + m) * 255)),
                  static_cast<int>(std::lround((g + m) * 255)),
                  static_cast<int>(std::lround((b + m) * 255)));
    return buf;
}

}  // namespace sfcurve
