#pragma once

#include "vinlab/geom/box.hpp"

namespace vinlab::partition {

/// Curve s -> T_{1,-s}(seed) = (x, y + 2sx, z + 3sy + 3s^2 x) sweeping a seed
/// of the base plank Theta(sigma, 0) through the sheared plank family.
class CoveringCurve {
public:
    CoveringCurve(const geom::Vec3& seed, double R, double sigma = 1.0);

    const geom::Vec3& seed() const { return seed_; }
    double R() const { return R_; }
    double sigma() const { return sigma_; }

    geom::Vec3 eval(double s) const {
        const double x = seed_.x, y = seed_.y, z = seed_.z;
        return {x, y + 2.0 * s * x, z + 3.0 * s * y + 3.0 * s * s * x};
    }

    /// Arc length of the segment s in [a, b]; ~ (|x| + |y|)(b - a).
    double arc_length(double a, double b, int quad_points = 64) const;

private:
    geom::Vec3 seed_;
    double R_;
    double sigma_;
};

CoveringCurve covering_curve(const geom::Vec3& seed, double R, double sigma = 1.0);

}  // namespace vinlab::partition
