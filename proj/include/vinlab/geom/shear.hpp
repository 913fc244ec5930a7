#pragma once

#include "vinlab/geom/vec3.hpp"

namespace vinlab::geom {

/// The shear/rescaling pair attached to the twisted cubic.
///
/// forward  = T_{sigma,c} : (w1, w2, w3) -> (w1/s, (w2 - 2c w1)/s^2, (w3 - 3c w2 + 3c^2 w1)/s^3)
/// inv_transpose = A_{sigma,c} = (T^{-1})^T :
///            (x1, x2, x3) -> (s(x1 + 2c x2 + 3c^2 x3), s^2(x2 + 3c x3), s^3 x3)
///
/// det(forward) = sigma^{-6}, det(inv_transpose) = sigma^6, and the pairing
/// <T w, A x> = <w, x> holds identically.
struct ShearMap {
    double sigma = 1.0;
    double c = 0.0;
    Mat3 forward;
    Mat3 inv_transpose;

    Vec3 apply(const Vec3& w) const { return forward * w; }
    Vec3 apply_dual(const Vec3& x) const { return inv_transpose * x; }
};

ShearMap shear_map(double sigma, double c);

/// Affine variant recentering an interval [c, c + delta] onto [0, 1]:
/// map(w) = T_{delta,c}(w) + shift with shift = (-c/delta, c^2/delta^2, -c^3/delta^3),
/// i.e. w -> ((w1 - c)/d, (w2 - 2c w1 + c^2)/d^2, (w3 - 3c w2 + 3c^2 w1 - c^3)/d^3).
struct AffineShear {
    ShearMap linear;
    Vec3 shift;

    Vec3 apply(const Vec3& w) const { return linear.forward * w + shift; }
};

AffineShear affine_shear(double delta, double c);

}  // namespace vinlab::geom
