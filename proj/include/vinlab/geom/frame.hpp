#pragma once

#include "vinlab/geom/vec3.hpp"

namespace vinlab::geom {

/// Frenet frame of the twisted cubic gamma(t) = (t, t^2, t^3) at parameter c.
///
/// The raw (unnormalized) tangent and binormal have closed forms
///   t(c) = (1, 2c, 3c^2),   b(c) = (3c^2, -3c, 1),
/// which are orthogonal for every c.  The normal is computed as
/// normalize(binormal x tangent) so that (tangent, normal, binormal) is an
/// exactly orthonormal right-handed triple.
struct Frame {
    double c = 0.0;
    Vec3 tangent;
    Vec3 normal;
    Vec3 binormal;
    Vec3 raw_tangent;
    Vec3 raw_binormal;

    Vec3 axis(std::size_t i) const { return i == 0 ? tangent : (i == 1 ? normal : binormal); }
};

Frame frenet_frame(double c);

/// Curve point gamma(c) = (c, c^2, c^3).
inline Vec3 curve_point(double c) { return {c, c * c, c * c * c}; }

/// First-order series form of the normal direction, (-2c - 9c^3, 1 - c^4, 3c + 6c^3).
/// Not exactly orthogonal to the tangent (the residual is O(c^4)); kept for
/// comparison against the exact cross-product normal.
Vec3 approx_normal(double c);

}  // namespace vinlab::geom
