#include "sfcurve/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sfcurve {

SquareMatrix build_matrix(const OrderedGifs& g, double t) {
    if (t < 0.0) throw Error("build_matrix: t must be >= 0");
    SquareMatrix m(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) {
        for (const Edge& e : g.out_edges(i)) m.at(i, e.target) += std::pow(e.map.ratio(), t);
    }
    return m;
}

double spectral_radius(const SquareMatrix& m) {
    const int n = m.n;
    if (n <= 0) throw Error("spectral_radius: empty matrix");
    double scale = 0.0;
    for (double v : m.a) {
        if (v < 0.0) throw Error("spectral_radius: matrix must be nonnegative");
        scale = std::max(scale, v);
    }
    if (scale == 0.0) return 0.0;

    const double eta = 1e-14 * scale;  // uniform positive fill
    const double shift = scale;        // diagonal shift
    std::vector<double> x(static_cast<std::size_t>(n), 1.0), y(static_cast<std::size_t>(n));
    double lo = 0.0, hi = 0.0;
    for (int it = 0; it < 500000; ++it) {
        double xs = 0.0;
        for (double v : x) xs += v;
        for (int i = 0; i < n; ++i) {
            double acc = shift * x[static_cast<std::size_t>(i)] + eta * xs;
            const double* row = &m.a[static_cast<std::size_t>(i) * n];
            for (int j = 0; j < n; ++j) acc += row[j] * x[static_cast<std::size_t>(j)];
            y[static_cast<std::size_t>(i)] = acc;
        }
        lo = std::numeric_limits<double>::infinity();
        hi = 0.0;
        double ymax = 0.0;
        for (int i = 0; i < n; ++i) {
            const double q = y[static_cast<std::size_t>(i)] / x[static_cast<std::size_t>(i)];
            lo = std::min(lo, q);
            hi = std::max(hi, q);
            ymax = std::max(ymax, y[static_cast<std::size_t>(i)]);
        }
        for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i)] / ymax;
        if (hi - lo <= 1e-13 * hi) {
            // the bracket contains rho(M + eta*J); undo the perturbations
            return std::max(0.0, 0.5 * (lo + hi) - shift - 0.5 * eta * n);
        }
    }
    throw Error("spectral_radius: power iteration did not converge");
}

double solve_dimension(const OrderedGifs& g) {
    auto rho = [&](double t) { return spectral_radius(build_matrix(g, t)); };
    double a = 0.0;
    double b = 1.0;
    while (rho(b) >= 1.0) {
        a = b;
        b *= 2.0;
        if (b > 1e6) throw Error("solve_dimension: failed to bracket the root");
    }
    double mid = 0.5 * (a + b);
    for (int it = 0; it < 200; ++it) {
        mid = 0.5 * (a + b);
        const double r = rho(mid);
        if (std::abs(r - 1.0) <= 1e-12) return mid;
        if (r > 1.0)
            a = mid;
        else
            b = mid;
        if (b - a <= 1e-13) break;
    }
    return 0.5 * (a + b);
}

std::vector<double> perron_vector(const OrderedGifs& g, double delta) {
    const SquareMatrix m = build_matrix(g, delta);
    const int n = m.n;
    if (std::abs(spectral_radius(m) - 1.0) > 1e-6)
        throw Error("perron_vector: rho(M(delta)) is not 1 at the given delta");

    // Power iteration on (M + I)/2: keeps the eigenvalue-1 eigenvector,
    // damps every other eigenvalue of modulus <= 1.
    auto run = [&](std::vector<double> x) {
        std::vector<double> y(static_cast<std::size_t>(n));
        for (int it = 0; it < 200000; ++it) {
            for (int i = 0; i < n; ++i) {
                double acc = x[static_cast<std::size_t>(i)];
                const double* row = &m.a[static_cast<std::size_t>(i) * n];
                for (int j = 0; j < n; ++j) acc += row[j] * x[static_cast<std::size_t>(j)];
                y[static_cast<std::size_t>(i)] = 0.5 * acc;
            }
            double ymax = *std::max_element(y.begin(), y.end());
            if (!(ymax > 0.0)) throw Error("perron_vector: iteration collapsed");
            double diff = 0.0;
            for (int i = 0; i < n; ++i) {
                y[static_cast<std::size_t>(i)] /= ymax;
                diff = std::max(diff,
                                std::abs(y[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(i)]));
            }
            x.swap(y);
            if (diff <= 1e-15) break;
        }
        return x;
    };

    std::vector<double> flat(static_cast<std::size_t>(n), 1.0);
    std::vector<double> ramp(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ramp[static_cast<std::size_t>(i)] = 1.0 + static_cast<double>(i) / n;
    const std::vector<double> x1 = run(flat);
    const std::vector<double> x2 = run(ramp);

    double start_diff = 0.0, residual = 0.0, minval = 1.0;
    for (int i = 0; i < n; ++i) {
        start_diff = std::max(start_diff, std::abs(x1[static_cast<std::size_t>(i)] -
                                                   x2[static_cast<std::size_t>(i)]));
        double acc = 0.0;
        const double* row = &m.a[static_cast<std::size_t>(i) * n];
        for (int j = 0; j < n; ++j) acc += row[j] * x1[static_cast<std::size_t>(j)];
        residual = std::max(residual, std::abs(acc - x1[static_cast<std::size_t>(i)]));
        minval = std::min(minval, x1[static_cast<std::size_t>(i)]);
    }
    if (start_diff > 1e-9 || minval <= 0.0)
        throw Error("perron_vector: eigenvalue-1 eigenvector is ambiguous "
                    "(is the graph strongly connected?)");
    if (residual > 1e-9) throw Error("perron_vector: power iteration did not converge");
    return x1;
}

std::vector<std::vector<double>> markov_weights(const OrderedGifs& g, double delta,
                                                const std::vector<double>& h) {
    if (static_cast<int>(h.size()) != g.vertex_count())
        throw Error("markov_weights: h size mismatch");
    for (double v : h)
        if (!(v > 0.0)) throw Error("markov_weights: h must be positive");
    std::vector<std::vector<double>> p(h.size());
    for (int i = 0; i < g.vertex_count(); ++i) {
        for (const Edge& e : g.out_edges(i)) {
            p[static_cast<std::size_t>(i)].push_back(
                h[static_cast<std::size_t>(e.target)] * std::pow(e.map.ratio(), delta) /
                h[static_cast<std::size_t>(i)]);
        }
    }
    return p;
}

SpectralData analyze(const OrderedGifs& g) {
    SpectralData sd;
    sd.delta = solve_dimension(g);
    sd.h = perron_vector(g, sd.delta);
    sd.p = markov_weights(g, sd.delta, sd.h);
    return sd;
}

}  // namespace sfcurve
