#pragma once

#include <cmath>
#include <complex>

#include "sfcurve/errors.hpp"

namespace sfcurve {

using Complex = std::complex<double>;

/// Contracting planar similarity z -> alpha*z + beta, or alpha*conj(z) + beta
/// when `conj` is set. The contraction ratio is |alpha|.
struct Similitude {
    Complex alpha{0.5, 0.0};
    Complex beta{0.0, 0.0};
    bool conj = false;

    double ratio() const { return std::abs(alpha); }

    Complex operator()(Complex z) const {
        return conj ? alpha * std::conj(z) + beta : alpha * z + beta;
    }
};

/// outer . inner collapsed into a single similitude, so that
/// compose(a, b)(z) == a(b(z)) for all z.
inline Similitude compose(const Similitude& outer, const Similitude& inner) {
    if (!outer.conj) {
        return {outer.alpha * inner.alpha, outer.alpha * inner.beta + outer.beta, inner.conj};
    }
    return {outer.alpha * std::conj(inner.alpha),
            outer.alpha * std::conj(inner.beta) + outer.beta, !inner.conj};
}

/// Unique fixed point of a strict contraction.
inline Complex fixed_point(const Similitude& s) {
    const double r = s.ratio();
    if (r >= 1.0) throw Error("fixed_point: map is not a strict contraction");
    if (!s.conj) return s.beta / (1.0 - s.alpha);
    // z = a*conj(z) + b  =>  z = (a*conj(b) + b) / (1 - |a|^2)
    return (s.alpha * std::conj(s.beta) + s.beta) / (1.0 - r * r);
}

}  // namespace sfcurve
