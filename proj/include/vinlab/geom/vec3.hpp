#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <ostream>

namespace vinlab::geom {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    double& operator[](std::size_t i) { return i == 0 ? x : (i == 1 ? y : z); }
    double operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm2(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm2(v)); }
inline double norm_inf(const Vec3& v) {
    return std::max(std::abs(v.x), std::max(std::abs(v.y), std::abs(v.z)));
}

inline Vec3 normalized(const Vec3& v) { return v / norm(v); }

inline std::ostream& operator<<(std::ostream& os, const Vec3& v) {
    return os << "(" << v.x << ", " << v.y << ", " << v.z << ")";
}

/// Column-major 3x3 matrix: col(i) is the image of the i-th basis vector.
struct Mat3 {
    std::array<Vec3, 3> cols{};

    Mat3() = default;
    Mat3(const Vec3& c0, const Vec3& c1, const Vec3& c2) : cols{c0, c1, c2} {}

    static Mat3 identity() { return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}; }
    static Mat3 diagonal(double a, double b, double c) { return {{a, 0, 0}, {0, b, 0}, {0, 0, c}}; }

    /// Rows given as vectors; convenience for maps written out coordinate-wise.
    static Mat3 from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
        return {{r0.x, r1.x, r2.x}, {r0.y, r1.y, r2.y}, {r0.z, r1.z, r2.z}};
    }

    const Vec3& col(std::size_t i) const { return cols[i]; }
    Vec3& col(std::size_t i) { return cols[i]; }
    Vec3 row(std::size_t i) const { return {cols[0][i], cols[1][i], cols[2][i]}; }

    Vec3 operator*(const Vec3& v) const {
        return cols[0] * v.x + cols[1] * v.y + cols[2] * v.z;
    }

    Mat3 operator*(const Mat3& m) const {
        return {(*this) * m.cols[0], (*this) * m.cols[1], (*this) * m.cols[2]};
    }

    Mat3 operator*(double s) const { return {cols[0] * s, cols[1] * s, cols[2] * s}; }

    Mat3 transposed() const { return Mat3::from_rows(cols[0], cols[1], cols[2]); }

    double det() const { return dot(cols[0], cross(cols[1], cols[2])); }

    Mat3 inverse() const {
        const Vec3 r0 = cross(cols[1], cols[2]);
        const Vec3 r1 = cross(cols[2], cols[0]);
        const Vec3 r2 = cross(cols[0], cols[1]);
        const double d = dot(cols[0], r0);
        return Mat3::from_rows(r0 / d, r1 / d, r2 / d);
    }
};

inline double max_abs(const Mat3& m) {
    double r = 0.0;
    for (int i = 0; i < 3; ++i) r = std::max(r, norm_inf(m.cols[static_cast<std::size_t>(i)]));
    return r;
}

}  // namespace vinlab::geom
