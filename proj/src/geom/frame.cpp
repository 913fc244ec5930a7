#include "vinlab/geom/frame.hpp"

#include <stdexcept>

namespace vinlab::geom {

Frame frenet_frame(double c) {
    if (!(c >= 0.0 && c <= 1.0)) {
        throw std::domain_error("frenet_frame: parameter must lie in [0, 1]");
    }
    Frame f;
    f.c = c;
    f.raw_tangent = {1.0, 2.0 * c, 3.0 * c * c};
    f.raw_binormal = {3.0 * c * c, -3.0 * c, 1.0};
    f.tangent = normalized(f.raw_tangent);
    f.binormal = normalized(f.raw_binormal);
    f.normal = normalized(cross(f.binormal, f.tangent));
    return f;
}

Vec3 approx_normal(double c) {
    return {-2.0 * c - 9.0 * c * c * c, 1.0 - c * c * c * c, 3.0 * c + 6.0 * c * c * c};
}

}  // namespace vinlab::geom
