#pragma once

// Shared test machinery: random system generators, the Eq-style chain-IFS
// families used by the randomized suites, and independent numeric oracles.

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "sfcurve/chain.hpp"
#include "sfcurve/gifs.hpp"
#include "sfcurve/lattice.hpp"

namespace testsup {

using sfcurve::Complex;
using sfcurve::Edge;
using sfcurve::OrderedGifs;
using sfcurve::Similitude;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline int uniform_int(std::mt19937_64& g, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(g);
}

inline Similitude random_similitude(std::mt19937_64& g, double rmin = 0.15, double rmax = 0.7) {
    return {std::polar(uniform(g, rmin, rmax), uniform(g, 0.0, 6.283185307179586)),
            {uniform(g, -1.0, 1.0), uniform(g, -1.0, 1.0)},
            uniform_int(g, 0, 1) == 1};
}

/// Arbitrary single-vertex ordered IFS (no chain structure implied).
inline OrderedGifs random_ifs(std::mt19937_64& g, int min_maps = 2, int max_maps = 5) {
    const int n = uniform_int(g, min_maps, max_maps);
    std::vector<Edge> row;
    for (int k = 0; k < n; ++k) row.push_back({0, random_similitude(g)});
    return OrderedGifs({"1"}, {std::move(row)});
}

/// Single-vertex IFS satisfying the head/tail chain identities by
/// construction: a random junction polyline 0 = x_0, ..., x_n = 1 turned into
/// maps anchored as S_k(0) = x_{k-1}, S_k(1) = x_k (reflections allowed, both
/// anchors real so the coefficients are the same either way).
inline OrderedGifs chain_satisfier(std::mt19937_64& g, int min_maps = 4, int max_maps = 6) {
    for (;;) {
        const int n = uniform_int(g, min_maps, max_maps);
        std::vector<Complex> x{{0.0, 0.0}};
        for (int k = 0; k < n; ++k)
            x.push_back(x.back() + std::polar(uniform(g, 0.5, 1.0), uniform(g, 0.0, 6.2831853)));
        const Complex d = x.back();
        if (std::abs(d) < 0.3) continue;
        bool ok = true;
        std::vector<Edge> row;
        for (int k = 1; k <= n; ++k) {
            for (Complex& z : x) z /= d;  // renormalize so x_n == 1
            break;
        }
        for (int k = 1; k <= n; ++k) {
            const Complex a = x[static_cast<std::size_t>(k)] - x[static_cast<std::size_t>(k - 1)];
            const double r = std::abs(a);
            if (r < 0.05 || r > 0.9) {
                ok = false;
                break;
            }
            row.push_back({0, {a, x[static_cast<std::size_t>(k - 1)],
                               uniform_int(g, 0, 1) == 1}});
        }
        if (!ok) continue;
        return OrderedGifs({"1"}, {std::move(row)});
    }
}

struct Violator {
    OrderedGifs gifs;
    double gap = 0.0;            // chain gap of the broken pair
    double diam = 0.0;           // certified diameter bound of the perturbed system
    double separation_lb = 0.0;  // certified lower bound on the broken pair's distance
    int pair_index = 0;
};

/// Chain satisfier with one junction torn open: the whole map S_{j+1} is
/// displaced so the broken pair's beads are certifiably separated. The
/// caller supplies the linearity-probe threshold shape (eps, sample_depth)
/// and the generator retries until the ball-separation certificate
///   |S_j(0) - S_{j+1}(0)| - (r_j + r_{j+1}) * D  >  eps + 2 * D * rmax^depth
/// holds with margin. The chain gap equals the displacement and is kept
/// >= 0.05 * D.
inline Violator make_violator(std::mt19937_64& g, double eps, int sample_depth) {
    for (int attempt = 0; attempt < 500; ++attempt) {
        // small-ratio satisfier so the beads are thin
        const int n = uniform_int(g, 4, 5);
        std::vector<Complex> x{{0.0, 0.0}};
        for (int k = 0; k < n; ++k)
            x.push_back(x.back() + std::polar(uniform(g, 0.5, 1.0), uniform(g, 0.0, 6.2831853)));
        const Complex d = x.back();
        if (std::abs(d) < 1.2) continue;
        for (Complex& z : x) z /= d;
        bool ok = true;
        std::vector<double> r(static_cast<std::size_t>(n));
        for (int k = 1; k <= n; ++k) {
            r[static_cast<std::size_t>(k - 1)] =
                std::abs(x[static_cast<std::size_t>(k)] - x[static_cast<std::size_t>(k - 1)]);
            if (r[static_cast<std::size_t>(k - 1)] < 0.08 || r[static_cast<std::size_t>(k - 1)] > 0.45)
                ok = false;
        }
        if (!ok) continue;

        int j = 1;
        for (int k = 1; k + 1 <= n - 1; ++k) {
            if (r[static_cast<std::size_t>(k)] + r[static_cast<std::size_t>(k + 1)] <
                r[static_cast<std::size_t>(j)] + r[static_cast<std::size_t>(j + 1)])
                j = k;
        }
        // 0-based: perturb map j+1, breaking the pair (j, j+1)
        const Complex t = std::polar(uniform(g, 0.7, 1.0), uniform(g, 0.0, 6.2831853));

        std::vector<Edge> row;
        for (int k = 1; k <= n; ++k) {
            Complex beta = x[static_cast<std::size_t>(k - 1)];
            if (k - 1 == j + 1) beta += t;
            row.push_back({0, {x[static_cast<std::size_t>(k)] - x[static_cast<std::size_t>(k - 1)],
                               beta, uniform_int(g, 0, 1) == 1}});
        }
        OrderedGifs cand({"1"}, {std::move(row)});
        const auto ht = sfcurve::heads_tails(cand);
        const double diam = sfcurve::diameter_bound(cand, ht, 5);
        const double gap = std::abs(t);
        if (gap < 0.05 * diam) continue;
        const auto& edges = cand.out_edges(0);
        const double sep =
            std::abs(edges[static_cast<std::size_t>(j)].map.beta -
                     edges[static_cast<std::size_t>(j + 1)].map.beta) -
            (r[static_cast<std::size_t>(j)] + r[static_cast<std::size_t>(j + 1)]) * diam;
        const double thresh = eps + 2.0 * diam * std::pow(cand.r_max(), sample_depth);
        if (sep <= 1.1 * thresh) continue;
        return {std::move(cand), gap, diam, sep, j};
    }
    throw std::runtime_error("make_violator: no certified instance found");
}

/// Largest-modulus root of the characteristic polynomial, computed without
/// any power iteration: Faddeev-LeVerrier coefficients + Durand-Kerner roots.
inline double char_poly_spectral_radius(const std::vector<std::vector<double>>& m) {
    const int n = static_cast<int>(m.size());
    // Faddeev-LeVerrier: c_0 = 1, M_1 = A, c_k = -tr(A M_k)/k, M_{k+1} = A(M_k + c_k I)
    std::vector<std::vector<double>> mk = m;
    std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
    c[0] = 1.0;
    for (int k = 1; k <= n; ++k) {
        double tr = 0.0;
        for (int i = 0; i < n; ++i) tr += mk[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
        c[static_cast<std::size_t>(k)] = -tr / k;
        if (k == n) break;
        for (int i = 0; i < n; ++i) mk[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(k)];
        std::vector<std::vector<double>> next(static_cast<std::size_t>(n),
                                              std::vector<double>(static_cast<std::size_t>(n), 0.0));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                double acc = 0.0;
                for (int p = 0; p < n; ++p) acc += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)] * mk[static_cast<std::size_t>(p)][static_cast<std::size_t>(l)];
                next[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] = acc;
            }
        mk = std::move(next);
    }
    // p(x) = x^n + c_1 x^{n-1} + ... + c_n ; Durand-Kerner
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        roots[static_cast<std::size_t>(i)] = std::pow(std::complex<double>(0.4, 0.9), i);
    auto eval = [&](std::complex<double> z) {
        std::complex<double> acc = 1.0;
        for (int k = 1; k <= n; ++k) acc = acc * z + c[static_cast<std::size_t>(k)];
        return acc;
    };
    for (int it = 0; it < 2000; ++it) {
        double moved = 0.0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> denom = 1.0;
            for (int l = 0; l < n; ++l)
                if (l != i) denom *= roots[static_cast<std::size_t>(i)] - roots[static_cast<std::size_t>(l)];
            const std::complex<double> delta = eval(roots[static_cast<std::size_t>(i)]) / denom;
            roots[static_cast<std::size_t>(i)] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-14) break;
    }
    double rho = 0.0;
    for (auto z : roots) rho = std::max(rho, std::abs(z));
    return rho;
}

/// All length-`len` unit-step paths 0 -> d on the given lattice; optionally
/// self-avoiding. Deterministic order (directions by ascending angle).
inline std::vector<std::vector<Complex>> enumerate_paths(sfcurve::LatticeKind kind, Complex d,
                                                         int len, bool self_avoiding) {
    std::vector<std::vector<Complex>> out;
    std::vector<Complex> pts{{0.0, 0.0}};
    std::function<void()> rec = [&]() {
        const Complex cur = pts.back();
        const int done = static_cast<int>(pts.size()) - 1;
        if (done == len) {
            if (std::abs(cur - d) < 1e-9) out.push_back(pts);
            return;
        }
        if (std::abs(cur - d) > (len - done) + 1e-9) return;
        for (Complex u : sfcurve::lattice_directions(kind)) {
            const Complex next = cur + u;
            if (self_avoiding) {
                bool seen = false;
                for (Complex p : pts)
                    if (std::abs(p - next) < 1e-9) {
                        seen = true;
                        break;
                    }
                if (seen) continue;
            }
            pts.push_back(next);
            rec();
            pts.pop_back();
        }
    };
    rec();
    return out;
}

/// Direction string of a path (index into lattice_directions), the
/// lexicographic key used to pick reconstruction defaults.
inline std::string direction_string(const std::vector<Complex>& pts, sfcurve::LatticeKind kind) {
    std::string s;
    const auto& dirs = sfcurve::lattice_directions(kind);
    for (std::size_t k = 1; k < pts.size(); ++k)
        for (int i = 0; i < static_cast<int>(dirs.size()); ++i)
            if (std::abs(pts[k] - pts[k - 1] - dirs[static_cast<std::size_t>(i)]) < 1e-9)
                s += static_cast<char>('0' + i);
    return s;
}

/// Overlap filter used by the Peano reconstruction oracle: duplicate cylinder
/// maps, or two cylinder centers g_w((head+tail)/2) sharing a grid cell of
/// pitch r_min^k*|d|/4 (no adjacency exemption: the center of a genuine tile
/// slot is interior, so even neighboring slots keep their centers apart).
inline bool center_probe_clean(const sfcurve::MarkedLatticePath& p, int max_depth) {
    const OrderedGifs g = sfcurve::build_gifs(p);
    const auto ht = sfcurve::heads_tails(g);
    std::vector<Complex> centers;
    for (int v = 0; v < g.vertex_count(); ++v)
        centers.push_back(0.5 * (ht[v].head + ht[v].tail));
    const double dmag = std::abs(p.d());
    for (int depth = 1; depth <= max_depth; ++depth) {
        const double pitch = std::pow(g.r_min(), depth) * dmag / 4.0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            std::map<std::tuple<long long, long long, long long, long long, int>, int> maps;
            std::map<std::pair<long long, long long>, int> cells;
            bool bad = false;
            sfcurve::for_each_path(
                g, v, depth, {}, [&](const std::vector<int>&, int term, const Similitude& m) {
                    if (bad) return;
                    auto q = [&](double x) { return static_cast<long long>(std::llround(x / (1e-9 * dmag))); };
                    if (!maps.emplace(std::make_tuple(q(m.alpha.real()), q(m.alpha.imag()),
                                                      q(m.beta.real()), q(m.beta.imag()),
                                                      static_cast<int>(m.conj)),
                                      0)
                             .second) {
                        bad = true;
                        return;
                    }
                    const Complex c = m(centers[static_cast<std::size_t>(term)]);
                    auto key = std::make_pair(static_cast<long long>(std::floor(c.real() / pitch)),
                                              static_cast<long long>(std::floor(c.imag() / pitch)));
                    if (++cells[key] > 1) bad = true;
                });
            if (bad) return false;
        }
    }
    return true;
}

}  // namespace testsup
