#include "vinlab/geom/shear.hpp"

#include <stdexcept>

namespace vinlab::geom {

ShearMap shear_map(double sigma, double c) {
    if (!(sigma > 0.0)) {
        throw std::domain_error("shear_map: sigma must be positive");
    }
    const double s1 = sigma, s2 = sigma * sigma, s3 = s2 * sigma;
    ShearMap m;
    m.sigma = sigma;
    m.c = c;
    m.forward = Mat3::from_rows({1.0 / s1, 0.0, 0.0},
                                {-2.0 * c / s2, 1.0 / s2, 0.0},
                                {3.0 * c * c / s3, -3.0 * c / s3, 1.0 / s3});
    m.inv_transpose = Mat3::from_rows({s1, 2.0 * c * s1, 3.0 * c * c * s1},
                                      {0.0, s2, 3.0 * c * s2},
                                      {0.0, 0.0, s3});
    return m;
}

AffineShear affine_shear(double delta, double c) {
    AffineShear a;
    a.linear = shear_map(delta, c);
    const double d1 = delta, d2 = delta * delta, d3 = d2 * delta;
    a.shift = {-c / d1, c * c / d2, -c * c * c / d3};
    return a;
}

}  // namespace vinlab::geom
