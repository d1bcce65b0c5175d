#pragma once

#include <functional>
#include <vector>

#include "sfcurve/gifs.hpp"

namespace sfcurve {

enum class LatticeKind { square, triangle };

/// Unit step directions of the lattice, sorted by angle in [0, 2*pi).
/// Square: 1, i, -1, -i. Triangle: the six sixth roots of unity.
const std::vector<Complex>& lattice_directions(LatticeKind kind);

/// Unit-step path 0 = z_0, ..., z_n = d on a planar lattice, with an
/// orientation mark (+1 / -1) and an optional reflection flag per segment.
struct MarkedLatticePath {
    LatticeKind lattice = LatticeKind::square;
    std::vector<Complex> points;
    std::vector<int> marks;       // +1 or -1 per segment
    std::vector<bool> refl;       // may be empty == all false
    Complex d() const { return points.back(); }
    int segments() const { return static_cast<int>(points.size()) - 1; }
};

/// Throws Error unless: z_0 = 0, every step is a lattice unit vector,
/// |d| > 1, and mark/reflection vectors match the segment count.
void validate(const MarkedLatticePath& p);

/// The ordered IFS carrying {0, d} onto {z_{k-1}, z_k} segment by segment.
/// Orientation +1 maps (0, d) to (z_{k-1}, z_k), orientation -1 reverses;
/// the reflection flag divides by conj(d) instead of d and conjugates the
/// argument. The defining anchor conditions are re-checked literally.
std::vector<Similitude> build_ifs(const MarkedLatticePath& p);

/// The ordered system generated by the marked path: a single-vertex linear
/// IFS when every mark is +1, otherwise the two-state system whose second
/// state traverses the path backwards. Heads and tails are verified to land
/// on (0, d) and (d, 0); a mismatch signals an inconsistent mark vector.
OrderedGifs build_gifs(const MarkedLatticePath& p);

struct ReptileReport {
    bool ratio_condition = false;  // segment count equals |d|^2
    int probe_depth = 0;
    std::size_t duplicate_maps = 0;
    std::size_t cell_collisions = 0;
    /// Heuristic only: true when the probe saw duplicate cylinder maps or
    /// grid-cell collisions at any probed depth. Never certifies that the
    /// open set condition holds.
    bool overlap_suspected = false;
};

/// Necessary reptile arithmetic (n == |d|^2 to 1e-12) plus an overlap probe:
/// at each depth k <= max_depth, hash all same-vertex cylinder maps and snap
/// the head anchors g_w(head of t(w)) to a grid of pitch r_min^k * |d| / 4.
/// Duplicate maps (an exact set coincidence of two cylinders), or two anchors
/// of non-adjacent cylinders sharing a cell without coinciding exactly, count
/// as suspected overlap. Exact anchor coincidences are curve self-touch
/// points and legitimate. The default depth is the smallest that separates
/// the two admissible Gosper-trace markings from the other 126.
ReptileReport reptile_flag(const MarkedLatticePath& p, int max_depth = 5,
                           const EnumLimits& lim = {});

/// Streams every marking of the trace in a fixed order: mark vectors are
/// enumerated as binary counters (bit k set means segment k+1 carries -1),
/// and, unless reflection_free, each mark vector is refined by all
/// reflection vectors in the same counter order.
void mark_enumerate(const std::vector<Complex>& trace, LatticeKind kind, bool reflection_free,
                    const std::function<void(const MarkedLatticePath&)>& yield);

}  // namespace sfcurve
