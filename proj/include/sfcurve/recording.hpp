#pragma once

#include <vector>

#include "sfcurve/chain.hpp"
#include "sfcurve/spectral.hpp"

namespace sfcurve {

/// Interval system F_i = [0, h_i] mirroring the graph and order of the plane
/// system: piece k of vertex i maps F_t(k) affinely onto
/// [offset_k, offset_k + h_t(k) * scaled_ratio_k], pieces laid left to right
/// in edge order with no gaps. scaled_ratio is r_e^delta.
struct RecordingSystem {
    struct Piece {
        double offset = 0.0;
        double scaled_ratio = 0.0;
    };
    std::vector<double> lengths;
    std::vector<std::vector<Piece>> pieces;
};

RecordingSystem build_recording(const OrderedGifs& g, const SpectralData& sd);

/// Greedy digit extraction of the coding of x in [0, h_vertex]: each level
/// picks the piece whose half-open interval contains the remainder (the last
/// interval is closed on the right; at an interior breakpoint the upper
/// cylinder wins) and rescales. The rescaled remainder is clamped into the
/// target interval; drift beyond 1e-9 of the largest h aborts.
PathWord encode(const RecordingSystem& rs, const OrderedGifs& g, int vertex, double x, int depth);

/// g_w(head of t(w)): the projection of any infinite extension of w lies
/// within diam_bound * ratio(w) of this point.
Complex project(const OrderedGifs& g, const HeadTailTable& ht, const PathWord& w);

/// Holder constant c' = 2 * D * r_min^-1 * h_min^(-1/delta): the
/// parametrization satisfies |psi(x) - psi(y)| <= c' |x - y|^(1/delta).
double holder_constant(const OrderedGifs& g, const SpectralData& sd, double diam_bound);

/// psi_vertex(x): encodes x until the geometric cylinder shrinks below tol
/// (depth chosen from the actual ratio product along the coding) and projects.
Complex psi(const OrderedGifs& g, const SpectralData& sd, const RecordingSystem& rs,
            const HeadTailTable& ht, double diam_bound, int vertex, double x, double tol);

/// Pointwise identical to psi (same digit arithmetic, same stopping rule);
/// shares coding prefixes across the batch.
std::vector<Complex> psi_batch(const OrderedGifs& g, const SpectralData& sd,
                               const RecordingSystem& rs, const HeadTailTable& ht,
                               double diam_bound, int vertex, const std::vector<double>& ts,
                               double tol);

/// Bundles everything needed to evaluate the parametrization repeatedly.
class Parametrizer {
  public:
    explicit Parametrizer(OrderedGifs g);

    const OrderedGifs& gifs() const { return gifs_; }
    const SpectralData& spectral() const { return sd_; }
    const RecordingSystem& recording() const { return rs_; }
    const HeadTailTable& table() const { return ht_; }
    double diam_bound() const { return diam_; }
    double length(int vertex) const;

    Complex psi(int vertex, double x, double tol) const;
    /// Same curve with the domain rescaled to [0, 1].
    Complex psi_unit(int vertex, double u, double tol) const;
    std::vector<Complex> psi_batch(int vertex, const std::vector<double>& ts, double tol) const;
    PathWord encode(int vertex, double x, int depth) const;
    double holder_constant() const;

  private:
    OrderedGifs gifs_;
    SpectralData sd_;
    RecordingSystem rs_;
    HeadTailTable ht_;
    double diam_ = 0.0;
};

}  // namespace sfcurve
