#include "sfcurve/recording.hpp"

#include <algorithm>
#include <cmath>

namespace sfcurve {

namespace {

constexpr int kMaxDigits = 200000;

double max_length(const RecordingSystem& rs) {
    double m = 0.0;
    for (double h : rs.lengths) m = std::max(m, h);
    return m;
}

// One digit: the piece index and the rescaled remainder.
struct Step {
    int digit;
    double remainder;
};

Step encode_step(const RecordingSystem& rs, const OrderedGifs& g, int v, double cur,
                 double slack) {
    const auto& ps = rs.pieces[static_cast<std::size_t>(v)];
    int k = static_cast<int>(ps.size()) - 1;
    while (k > 0 && cur < ps[static_cast<std::size_t>(k)].offset) --k;
    const double rescaled =
        (cur - ps[static_cast<std::size_t>(k)].offset) / ps[static_cast<std::size_t>(k)].scaled_ratio;
    const double ht = rs.lengths[static_cast<std::size_t>(
        g.out_edges(v)[static_cast<std::size_t>(k)].target)];
    if (rescaled < -slack || rescaled > ht + slack)
        throw PrecisionError("encode: digit extraction drifted beyond the guard");
    return {k, std::clamp(rescaled, 0.0, ht)};
}

double checked_start(const RecordingSystem& rs, const OrderedGifs& g, int vertex, double x) {
    if (vertex < 0 || vertex >= g.vertex_count()) throw Error("encode: vertex out of range");
    const double h = rs.lengths[static_cast<std::size_t>(vertex)];
    const double slack = 1e-9 * max_length(rs);
    if (x < -slack || x > h + slack) throw Error("encode: x lies outside [0, h]");
    return std::clamp(x, 0.0, h);
}

}  // namespace

RecordingSystem build_recording(const OrderedGifs& g, const SpectralData& sd) {
    if (static_cast<int>(sd.h.size()) != g.vertex_count())
        throw Error("build_recording: spectral data does not match the system");
    RecordingSystem rs;
    rs.lengths = sd.h;
    rs.pieces.resize(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        double offset = 0.0;
        for (const Edge& e : g.out_edges(v)) {
            const double scaled = std::pow(e.map.ratio(), sd.delta);
            rs.pieces[static_cast<std::size_t>(v)].push_back({offset, scaled});
            offset += scaled * sd.h[static_cast<std::size_t>(e.target)];
        }
        if (std::abs(offset - sd.h[static_cast<std::size_t>(v)]) > 1e-12 * std::max(1.0, offset))
            throw Error("build_recording: interval pieces do not close up to h_i");
    }
    return rs;
}

PathWord encode(const RecordingSystem& rs, const OrderedGifs& g, int vertex, double x, int depth) {
    if (depth < 0) throw Error("encode: depth must be >= 0");
    double cur = checked_start(rs, g, vertex, x);
    const double slack = 1e-9 * max_length(rs);
    PathWord w{vertex, {}};
    w.edges.reserve(static_cast<std::size_t>(depth));
    int v = vertex;
    for (int i = 0; i < depth; ++i) {
        const Step s = encode_step(rs, g, v, cur, slack);
        w.edges.push_back(s.digit);
        cur = s.remainder;
        v = g.out_edges(v)[static_cast<std::size_t>(s.digit)].target;
    }
    return w;
}

Complex project(const OrderedGifs& g, const HeadTailTable& ht, const PathWord& w) {
    if (w.edges.empty()) {
        if (w.start < 0 || w.start >= g.vertex_count()) throw Error("project: vertex out of range");
        return ht[w.start].head;
    }
    return cylinder_map(g, w)(ht[path_target(g, w)].head);
}

double holder_constant(const OrderedGifs& g, const SpectralData& sd, double diam_bound) {
    double hmin = sd.h.empty() ? 0.0 : *std::min_element(sd.h.begin(), sd.h.end());
    if (!(hmin > 0.0)) throw Error("holder_constant: h must be positive");
    return 2.0 * diam_bound / (g.r_min() * std::pow(hmin, 1.0 / sd.delta));
}

Complex psi(const OrderedGifs& g, const SpectralData&, const RecordingSystem& rs,
            const HeadTailTable& ht, double diam_bound, int vertex, double x, double tol) {
    if (!(tol > 0.0)) throw Error("psi: tol must be positive");
    double cur = checked_start(rs, g, vertex, x);
    const double slack = 1e-9 * max_length(rs);
    int v = vertex;
    Similitude comp;
    bool have = false;
    double spread = diam_bound;
    for (int digits = 0; digits < kMaxDigits && spread > tol; ++digits) {
        const Step s = encode_step(rs, g, v, cur, slack);
        const Edge& e = g.out_edges(v)[static_cast<std::size_t>(s.digit)];
        comp = have ? compose(comp, e.map) : e.map;
        have = true;
        spread *= e.map.ratio();
        cur = s.remainder;
        v = e.target;
    }
    if (spread > tol) throw PrecisionError("psi: tol unreachable within the digit cap");
    return have ? comp(ht[v].head) : ht[v].head;
}

std::vector<Complex> psi_batch(const OrderedGifs& g, const SpectralData&,
                               const RecordingSystem& rs, const HeadTailTable& ht,
                               double diam_bound, int vertex, const std::vector<double>& ts,
                               double tol) {
    if (!(tol > 0.0)) throw Error("psi: tol must be positive");
    const double slack = 1e-9 * max_length(rs);
    std::vector<Complex> out(ts.size());
    if (ts.empty()) return out;

    // Shared-prefix evaluation: frames bucket the still-open points by their
    // next digit; per-point arithmetic is exactly psi's.
    struct Frame {
        int vertex;
        Similitude comp;
        bool have;
        double spread;
        int digits;
        std::vector<std::size_t> idx;
        std::vector<double> cur;
    };
    Frame root{vertex, Similitude{}, false, diam_bound, 0, {}, {}};
    root.idx.reserve(ts.size());
    root.cur.reserve(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        root.idx.push_back(i);
        root.cur.push_back(checked_start(rs, g, vertex, ts[i]));
    }

    std::vector<Frame> stack;
    stack.push_back(std::move(root));
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (f.spread <= tol) {
            const Complex val = f.have ? f.comp(ht[f.vertex].head) : ht[f.vertex].head;
            for (std::size_t i : f.idx) out[i] = val;
            continue;
        }
        if (f.digits >= kMaxDigits)
            throw PrecisionError("psi: tol unreachable within the digit cap");
        const auto& edges = g.out_edges(f.vertex);
        std::vector<Frame> children(edges.size());
        for (std::size_t j = 0; j < f.idx.size(); ++j) {
            const Step s = encode_step(rs, g, f.vertex, f.cur[j], slack);
            auto& child = children[static_cast<std::size_t>(s.digit)];
            child.idx.push_back(f.idx[j]);
            child.cur.push_back(s.remainder);
        }
        for (std::size_t k = 0; k < children.size(); ++k) {
            if (children[k].idx.empty()) continue;
            const Edge& e = edges[k];
            children[k].vertex = e.target;
            children[k].comp = f.have ? compose(f.comp, e.map) : e.map;
            children[k].have = true;
            children[k].spread = f.spread * e.map.ratio();
            children[k].digits = f.digits + 1;
            stack.push_back(std::move(children[k]));
        }
    }
    return out;
}

Parametrizer::Parametrizer(OrderedGifs g)
    : gifs_(std::move(g)),
      sd_(analyze(gifs_)),
      rs_(build_recording(gifs_, sd_)),
      ht_(heads_tails(gifs_)),
      diam_(diameter_bound(gifs_, ht_)) {}

double Parametrizer::length(int vertex) const {
    if (vertex < 0 || vertex >= gifs_.vertex_count()) throw Error("length: vertex out of range");
    return sd_.h[static_cast<std::size_t>(vertex)];
}

Complex Parametrizer::psi(int vertex, double x, double tol) const {
    return sfcurve::psi(gifs_, sd_, rs_, ht_, diam_, vertex, x, tol);
}

Complex Parametrizer::psi_unit(int vertex, double u, double tol) const {
    return psi(vertex, u * length(vertex), tol);
}

std::vector<Complex> Parametrizer::psi_batch(int vertex, const std::vector<double>& ts,
                                             double tol) const {
    return sfcurve::psi_batch(gifs_, sd_, rs_, ht_, diam_, vertex, ts, tol);
}

PathWord Parametrizer::encode(int vertex, double x, int depth) const {
    return sfcurve::encode(rs_, gifs_, vertex, x, depth);
}

double Parametrizer::holder_constant() const {
    return sfcurve::holder_constant(gifs_, sd_, diam_);
}

}  // namespace sfcurve
