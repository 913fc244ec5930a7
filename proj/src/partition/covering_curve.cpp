#include "vinlab/partition/covering_curve.hpp"

#include <cmath>
#include <stdexcept>

namespace vinlab::partition {

CoveringCurve::CoveringCurve(const geom::Vec3& seed, double R, double sigma)
    : seed_(seed), R_(R), sigma_(sigma) {
    const geom::OrientedBox base = geom::small_plank(R, sigma, 0.0);
    if (!base.contains(seed, 1.0, 1e-12)) {
        throw std::domain_error("covering_curve: seed lies outside the base plank");
    }
}

double CoveringCurve::arc_length(double a, double b, int quad_points) const {
    // Speed |C'(s)| = sqrt((2x)^2 + (3y + 6xs)^2); midpoint rule.
    const double x = seed_.x, y = seed_.y;
    const double h = (b - a) / quad_points;
    double sum = 0.0;
    for (int i = 0; i < quad_points; ++i) {
        const double s = a + (i + 0.5) * h;
        const double vy = 2.0 * x;
        const double vz = 3.0 * y + 6.0 * x * s;
        sum += std::sqrt(vy * vy + vz * vz);
    }
    return sum * h;
}

CoveringCurve covering_curve(const geom::Vec3& seed, double R, double sigma) {
    return CoveringCurve(seed, R, sigma);
}

}  // namespace vinlab::partition
