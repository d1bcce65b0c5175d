#pragma once

#include <vector>

#include "sfcurve/gifs.hpp"

namespace sfcurve {

/// Eventually periodic edge word: `pre` leads from the start vertex to the
/// cycle entry, `cycle` loops back to it. Indices are per-vertex edge
/// positions (for the lowest word they are all 0, for the highest word each
/// is its vertex's last position).
struct ExtremeWord {
    std::vector<int> pre;
    std::vector<int> cycle;
};

struct HeadTail {
    Complex head;
    Complex tail;
    ExtremeWord lowest;
    ExtremeWord highest;
};

struct HeadTailTable {
    std::vector<HeadTail> rows;
    const HeadTail& operator[](int v) const { return rows.at(static_cast<std::size_t>(v)); }
};

/// Projections of the lowest and highest infinite path from every vertex.
/// The lowest path repeatedly takes the first-ordered out-edge, which defines
/// an eventually periodic walk on the finite vertex set; the head is the
/// pre-cycle composition applied to the fixed point of the cycle composition.
/// Tails symmetrically with last-ordered edges.
HeadTailTable heads_tails(const OrderedGifs& g);

/// First `len` edges of the lowest (or highest) path from `vertex`.
PathWord extreme_path(const OrderedGifs& g, int vertex, int len, bool lowest);

struct ChainViolation {
    int vertex = 0;
    int edge_index = 0;  // the violating ordered pair is (edge_index, edge_index + 1)
    double gap = 0.0;
    Complex left;   // g_lower(tail of target)
    Complex right;  // g_upper(head of target)
};

struct ChainReport {
    std::vector<ChainViolation> violations;
    bool pass() const { return violations.empty(); }
    double max_gap() const;
};

/// Checks g_w(tail of E_t(w)) == g_v(head of E_t(v)) for every vertex and
/// every adjacent ordered pair (w, v) of its out-edges, up to `tol`.
/// A pass certifies linearity of the ordered system.
ChainReport chain_check(const OrderedGifs& g, double tol);

/// Certified upper bound for max_i diam E_i: with A the largest anchor-set
/// bounding-box diagonal at depth k and q = r_max^k, every point of E_i lies
/// within D*q of an anchor, so D <= A + 2*q*D and D <= A / (1 - 2q) whenever
/// 2q < 1. The depth is raised until 2q < 1 and lowered while the enumeration
/// would blow the cap.
double diameter_bound(const OrderedGifs& g, const HeadTailTable& ht, int depth = 8,
                      const EnumLimits& lim = {});

/// Head anchors of all depth-`depth` refinements of the cylinder of w:
/// { g_(w.u)(head of t(u)) : |u| = depth }. depth 0 gives the single point
/// g_w(head of t(w)).
std::vector<Complex> cylinder_anchors(const OrderedGifs& g, const PathWord& w,
                                      const HeadTailTable& ht, int depth,
                                      const EnumLimits& lim = {});

struct ProbePair {
    int vertex = 0;
    PathWord lower, upper;
    /// Exact min anchor distance when the pairwise scan is affordable,
    /// otherwise the certified threshold the pair exceeded.
    double distance = 0.0;
    double threshold = 0.0;
};

struct ProbeReport {
    std::vector<ProbePair> separated;
    double threshold = 0.0;
    bool pass() const { return separated.empty(); }
};

/// Empirical linearity probe: for every pair of dictionary-adjacent paths in
/// Gamma_i^k, tests whether the two cylinders' depth-`sample_depth` anchor
/// sets come within eps + 2*D*r_max^sample_depth of each other. For a linear
/// system no pair separates at any k; a chain violation must surface at some
/// k. Deterministic; anchor sets are compared through a grid hash.
ProbeReport linearity_probe(const OrderedGifs& g, const HeadTailTable& ht, double diam_bound,
                            int k, int sample_depth, double eps, const EnumLimits& lim = {});
ProbeReport linearity_probe(const OrderedGifs& g, int k, int sample_depth, double eps,
                            const EnumLimits& lim = {});

}  // namespace sfcurve
