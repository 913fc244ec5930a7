#include "vinlab/incidence/overlap.hpp"

#include <cmath>

namespace vinlab::incidence {

using geom::Vec3;

namespace {

inline bool separated_on(const Vec3& axis, const Vec3& d, const Vec3* ha, const Vec3* hb,
                         double tol) {
    const double c = std::abs(dot(axis, d));
    const double ra = std::abs(dot(axis, ha[0])) + std::abs(dot(axis, ha[1])) +
                      std::abs(dot(axis, ha[2]));
    const double rb = std::abs(dot(axis, hb[0])) + std::abs(dot(axis, hb[1])) +
                      std::abs(dot(axis, hb[2]));
    return c > ra + rb + tol;
}

}  // namespace

bool boxes_intersect(const geom::OrientedBox& a, const geom::OrientedBox& b) {
    const Vec3 ha[3] = {a.half_edge(0), a.half_edge(1), a.half_edge(2)};
    const Vec3 hb[3] = {b.half_edge(0), b.half_edge(1), b.half_edge(2)};
    const Vec3 d = b.center() - a.center();

    double scale = norm_inf(d);
    for (int i = 0; i < 3; ++i) scale = std::max(scale, std::max(norm_inf(ha[i]), norm_inf(hb[i])));
    const double tol = 1e-12 * scale;

    // Face normals of a and b.
    for (int i = 0; i < 3; ++i) {
        const Vec3 na = cross(ha[(i + 1) % 3], ha[(i + 2) % 3]);
        if (norm2(na) > 0.0 && separated_on(na, d, ha, hb, tol * norm(na))) return false;
        const Vec3 nb = cross(hb[(i + 1) % 3], hb[(i + 2) % 3]);
        if (norm2(nb) > 0.0 && separated_on(nb, d, ha, hb, tol * norm(nb))) return false;
    }
    // Edge-edge cross products.
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const Vec3 axis = cross(ha[i], hb[j]);
            const double n2 = norm2(axis);
            if (n2 < 1e-24 * norm2(ha[i]) * norm2(hb[j])) continue;  // near-parallel edges
            if (separated_on(axis, d, ha, hb, tol * norm(axis))) return false;
        }
    }
    return true;
}

}  // namespace vinlab::incidence
