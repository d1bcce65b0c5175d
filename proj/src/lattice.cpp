#include "sfcurve/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_map>

#include "sfcurve/chain.hpp"

namespace sfcurve {

namespace {

constexpr double kAnchorTol = 1e-12;

double scale_of(const MarkedLatticePath& p) { return std::max(1.0, std::abs(p.d())); }

bool is_unit_direction(Complex step, LatticeKind kind) {
    for (Complex u : lattice_directions(kind)) {
        if (std::abs(step - u) <= 1e-9) return true;
    }
    return false;
}

}  // namespace

const std::vector<Complex>& lattice_directions(LatticeKind kind) {
    static const std::vector<Complex> square{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    static const std::vector<Complex> triangle = [] {
        std::vector<Complex> dirs;
        for (int k = 0; k < 6; ++k)
            dirs.push_back(std::polar(1.0, k * std::numbers::pi / 3.0));
        return dirs;
    }();
    return kind == LatticeKind::square ? square : triangle;
}

void validate(const MarkedLatticePath& p) {
    if (p.points.size() < 2) throw Error("lattice path: need at least one segment");
    if (std::abs(p.points.front()) > 1e-12) throw Error("lattice path: must start at 0");
    if (static_cast<int>(p.marks.size()) != p.segments())
        throw Error("lattice path: one mark per segment required");
    if (!p.refl.empty() && static_cast<int>(p.refl.size()) != p.segments())
        throw Error("lattice path: reflection vector length mismatch");
    for (int m : p.marks) {
        if (m != 1 && m != -1) throw Error("lattice path: marks must be +1 or -1");
    }
    for (std::size_t k = 1; k < p.points.size(); ++k) {
        if (!is_unit_direction(p.points[k] - p.points[k - 1], p.lattice))
            throw Error("lattice path: consecutive points must be lattice neighbors");
    }
    if (std::abs(p.d()) <= 1.0 + 1e-12)
        throw Error("lattice path: |d| must exceed 1 so the maps contract");
}

std::vector<Similitude> build_ifs(const MarkedLatticePath& p) {
    validate(p);
    const Complex d = p.d();
    const double tol = kAnchorTol * scale_of(p);
    std::vector<Similitude> maps;
    maps.reserve(static_cast<std::size_t>(p.segments()));
    for (int k = 0; k < p.segments(); ++k) {
        const Complex a = p.points[static_cast<std::size_t>(k)];
        const Complex b = p.points[static_cast<std::size_t>(k) + 1];
        const bool refl = !p.refl.empty() && p.refl[static_cast<std::size_t>(k)];
        const bool fwd = p.marks[static_cast<std::size_t>(k)] == 1;
        const Complex den = refl ? std::conj(d) : d;
        Similitude s;
        s.conj = refl;
        s.alpha = (fwd ? b - a : a - b) / den;
        s.beta = fwd ? a : b;
        // the defining anchor conditions, checked literally
        const Complex at0 = s(Complex{0, 0});
        const Complex atd = s(d);
        if (std::abs(at0 - (fwd ? a : b)) > tol || std::abs(atd - (fwd ? b : a)) > tol)
            throw Error("build_ifs: anchor condition failed");
        maps.push_back(s);
    }
    return maps;
}

OrderedGifs build_gifs(const MarkedLatticePath& p) {
    const std::vector<Similitude> maps = build_ifs(p);
    const int n = p.segments();
    const bool all_forward =
        std::all_of(p.marks.begin(), p.marks.end(), [](int m) { return m == 1; });

    OrderedGifs g = [&] {
        if (all_forward) {
            std::vector<Edge> row;
            for (const Similitude& s : maps) row.push_back({0, s});
            return OrderedGifs({"1"}, {std::move(row)});
        }
        std::vector<Edge> fwd, rev;
        for (int k = 0; k < n; ++k) {
            fwd.push_back({p.marks[static_cast<std::size_t>(k)] == 1 ? 0 : 1,
                           maps[static_cast<std::size_t>(k)]});
        }
        for (int k = n; k-- > 0;) {
            rev.push_back({p.marks[static_cast<std::size_t>(k)] == 1 ? 1 : 0,
                           maps[static_cast<std::size_t>(k)]});
        }
        return OrderedGifs({"1", "-1"}, {std::move(fwd), std::move(rev)});
    }();

    // Heads and tails must land on the path anchors.
    const HeadTailTable ht = heads_tails(g);
    const Complex d = p.d();
    const double tol = 1e-9 * scale_of(p);
    bool ok = std::abs(ht[0].head) <= tol && std::abs(ht[0].tail - d) <= tol;
    if (ok && g.vertex_count() == 2)
        ok = std::abs(ht[1].head - d) <= tol && std::abs(ht[1].tail) <= tol;
    if (!ok) throw Error("build_gifs: head/tail anchors are inconsistent with the mark vector");
    return g;
}

namespace {

struct MapKey {
    long long ar, ai, br, bi;
    bool conj;
    bool operator==(const MapKey& o) const {
        return ar == o.ar && ai == o.ai && br == o.br && bi == o.bi && conj == o.conj;
    }
};

struct MapKeyHash {
    std::size_t operator()(const MapKey& k) const {
        std::size_t h = std::hash<long long>()(k.ar);
        auto mix = [&h](long long v) { h ^= std::hash<long long>()(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
        mix(k.ai);
        mix(k.br);
        mix(k.bi);
        mix(k.conj ? 1 : 0);
        return h;
    }
};

long long quant(double v, double q) { return static_cast<long long>(std::llround(v / q)); }

struct CellKey {
    long long x, y;
    bool operator==(const CellKey& o) const { return x == o.x && y == o.y; }
};

struct CellKeyHash {
    std::size_t operator()(const CellKey& k) const {
        return std::hash<long long>()(k.x * 1000003LL + k.y);
    }
};

}  // namespace

ReptileReport reptile_flag(const MarkedLatticePath& p, int max_depth, const EnumLimits& lim) {
    validate(p);
    ReptileReport rep;
    const double dd = std::norm(p.d());
    rep.ratio_condition = std::abs(static_cast<double>(p.segments()) - dd) <= 1e-12 * std::max(1.0, dd);
    rep.probe_depth = max_depth;

    const OrderedGifs g = build_gifs(p);
    const HeadTailTable ht = heads_tails(g);
    const double dmag = std::abs(p.d());
    const double qmap = 1e-9 * std::max(1.0, dmag);
    for (int depth = 1; depth <= max_depth; ++depth) {
        const double pitch = std::pow(g.r_min(), depth) * dmag / 4.0;
        // exact coincidences are curve self-touch points (junction revisits);
        // every self-touching space filler has them, so they do not count
        const double exact_tol = 1e-9 * std::pow(g.r_min(), depth) * dmag;
        for (int v = 0; v < g.vertex_count(); ++v) {
            std::unordered_map<MapKey, int, MapKeyHash> seen_maps;
            std::unordered_map<CellKey, std::vector<std::pair<int, Complex>>, CellKeyHash> cells;
            int index = 0;
            for_each_path(g, v, depth, lim,
                          [&](const std::vector<int>&, int term, const Similitude& m) {
                              MapKey mk{quant(m.alpha.real(), qmap), quant(m.alpha.imag(), qmap),
                                        quant(m.beta.real(), qmap), quant(m.beta.imag(), qmap),
                                        m.conj};
                              if (!seen_maps.emplace(mk, index).second) ++rep.duplicate_maps;
                              const Complex c = m(ht[term].head);
                              CellKey ck{static_cast<long long>(std::floor(c.real() / pitch)),
                                         static_cast<long long>(std::floor(c.imag() / pitch))};
                              auto& bucket = cells[ck];
                              for (const auto& [other, oc] : bucket) {
                                  if (std::abs(other - index) < 2) continue;
                                  if (std::abs(oc - c) <= exact_tol) continue;
                                  ++rep.cell_collisions;
                              }
                              bucket.emplace_back(index, c);
                              ++index;
                          });
        }
    }
    rep.overlap_suspected = rep.duplicate_maps > 0 || rep.cell_collisions > 0;
    return rep;
}

void mark_enumerate(const std::vector<Complex>& trace, LatticeKind kind, bool reflection_free,
                    const std::function<void(const MarkedLatticePath&)>& yield) {
    if (trace.size() < 2) throw Error("mark_enumerate: trace needs at least one segment");
    const int n = static_cast<int>(trace.size()) - 1;
    if (n > 24) throw Error("mark_enumerate: trace too long to enumerate");
    MarkedLatticePath p;
    p.lattice = kind;
    p.points = trace;
    p.marks.assign(static_cast<std::size_t>(n), 1);
    p.refl.assign(static_cast<std::size_t>(n), false);
    validate(p);

    const std::uint64_t span = 1ULL << n;
    for (std::uint64_t mv = 0; mv < span; ++mv) {
        for (int k = 0; k < n; ++k)
            p.marks[static_cast<std::size_t>(k)] = (mv >> k) & 1ULL ? -1 : 1;
        if (reflection_free) {
            std::fill(p.refl.begin(), p.refl.end(), false);
            yield(p);
            continue;
        }
        for (std::uint64_t rv = 0; rv < span; ++rv) {
            for (int k = 0; k < n; ++k) p.refl[static_cast<std::size_t>(k)] = (rv >> k) & 1ULL;
            yield(p);
        }
    }
}

}  // namespace sfcurve
