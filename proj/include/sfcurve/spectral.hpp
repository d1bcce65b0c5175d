#pragma once

#include <vector>

#include "sfcurve/gifs.hpp"

namespace sfcurve {

struct SquareMatrix {
    int n = 0;
    std::vector<double> a;  // row-major

    explicit SquareMatrix(int size)
        : n(size), a(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0.0) {}
    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

/// M(t): entry (i,j) is the sum of r_e^t over edges e from i to j.
SquareMatrix build_matrix(const OrderedGifs& g, double t);

/// Spectral radius of a nonnegative matrix by power iteration on a strictly
/// positive perturbation (uniform +eta everywhere kills reducibility, +scale
/// on the diagonal kills periodicity), with the Collatz-Wielandt quotient
/// bracket as the convergence certificate. Zero matrix gives 0.
double spectral_radius(const SquareMatrix& m);

/// Similarity dimension: the unique root of rho(M(t)) = 1, found by bisection
/// on the strictly decreasing map t -> rho(M(t)).
double solve_dimension(const OrderedGifs& g);

/// Positive eigenvector of M(delta) for eigenvalue 1, normalized so
/// max_i h_i = 1. Throws when the eigenvector is ambiguous (reducible graph
/// with several eigenvalue-1 blocks) or the iteration fails to converge.
std::vector<double> perron_vector(const OrderedGifs& g, double delta);

/// p_e = h_t(e) * r_e^delta / h_src(e), per vertex in edge order. Sums to 1
/// over each vertex's out-edges.
std::vector<std::vector<double>> markov_weights(const OrderedGifs& g, double delta,
                                                const std::vector<double>& h);

struct SpectralData {
    double delta = 0.0;
    std::vector<double> h;
    std::vector<std::vector<double>> p;
};

/// delta, h and p in one shot.
SpectralData analyze(const OrderedGifs& g);

}  // namespace sfcurve
