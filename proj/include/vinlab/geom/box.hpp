#pragma once

#include <array>
#include <optional>
#include <string>

#include "vinlab/geom/frame.hpp"
#include "vinlab/geom/shear.hpp"
#include "vinlab/geom/vec3.hpp"

namespace vinlab::geom {

enum class Role {
    FreqPlank,     // theta: frequency plank (R^{-1/3}, R^{-2/3}, R^{-1})
    SpatialPlank,  // P: spatial plank (R^{1/3}, R^{2/3}, R)
    Tube,          // T: (R^{2/3}, R^{2/3}, R)
    Plate,         // S: (d^{-1}, d^{-2}, d^{-2})
    SmallPlank,    // Theta(sigma, s)
    FatPlate,      // Pi: (R^{2/3}, R, R)
    BoxB,          // B: (R^{2/3}, R^{5/6}, R)
    BoxSigma,      // Sigma: (R^{1/2}, R^{5/6}, R)
    BoxTau,        // tau: (R^{1/2}, R^{2/3}, R)
    BoxLambda,     // Lambda: (R^{1/2}, R^{2/3}, R^{5/6})
    BoxU,          // U: union box of a tube bundle
    PlatePhi,      // Phi: (R^{1/2}, R^{2/3}, R^{2/3})
    CubeDelta,     // Delta: R^{1/2}-cube
    CubeQ,         // Q: R^{2/3}-cube
    CubeSmallQ,    // q: rich-cube side (R^{2/3}, R^{1/3} or d^{-1} depending on family)
    Generic,
};

const char* role_name(Role r);
Role role_from_name(const std::string& name);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double length() const { return hi - lo; }
    double center() const { return 0.5 * (lo + hi); }
};

/// Outward half-space n . x <= d with unit normal n.
struct HalfSpace {
    Vec3 n;
    double d = 0.0;

    double excess(const Vec3& x) const { return dot(n, x) - d; }
};

struct Aabb {
    Vec3 lo, hi;
};

/// A parallelepiped: center + sum u_i e_i for |u_i| <= 1/2, where e_i are the
/// columns of `edges` (full edge vectors).  Rectangular boxes are the special
/// case of mutually orthogonal edges; the sheared plank/tube/plate species
/// carry their exact half-space geometry through a non-orthogonal edge matrix.
class OrientedBox {
public:
    OrientedBox() : edges_(Mat3::identity()), inv_edges_(Mat3::identity()) {}
    OrientedBox(const Vec3& center, const Mat3& edges, Role role = Role::Generic,
                std::optional<Interval> interval = std::nullopt);

    /// Rectangular box from unit axes and full edge lengths.
    static OrientedBox rectangular(const Vec3& center, const std::array<Vec3, 3>& axes,
                                   const Vec3& full_lengths, Role role = Role::Generic,
                                   std::optional<Interval> interval = std::nullopt);

    /// Axis-aligned box given by half-widths (the set {|x_i| <= h_i} translated).
    static OrientedBox axis_box(const Vec3& center, const Vec3& half_widths,
                                Role role = Role::Generic,
                                std::optional<Interval> interval = std::nullopt);

    static OrientedBox cube(const Vec3& center, double side, Role role = Role::Generic);

    const Vec3& center() const { return center_; }
    const Mat3& edges() const { return edges_; }
    Role role() const { return role_; }
    const std::optional<Interval>& interval() const { return interval_; }

    Vec3 edge(std::size_t i) const { return edges_.col(i); }
    Vec3 half_edge(std::size_t i) const { return edges_.col(i) * 0.5; }

    /// Unit directions of the edges.
    std::array<Vec3, 3> axes() const;
    /// Full edge lengths |e_i|.
    Vec3 lengths() const;

    double volume() const { return std::abs(edges_.det()); }

    /// Box coordinates of a point: u with x = center + edges * u.
    Vec3 to_box_coords(const Vec3& x) const { return inv_edges_ * (x - center_); }

    bool contains(const Vec3& x, double dilation = 1.0, double tol = 0.0) const;

    std::array<Vec3, 8> vertices(double dilation = 1.0) const;
    std::array<HalfSpace, 6> halfspaces(double dilation = 1.0) const;
    Aabb aabb(double dilation = 1.0) const;

    OrientedBox dilated(double factor) const;
    OrientedBox translated(const Vec3& t) const;
    /// Image under an invertible linear map (role and interval preserved).
    OrientedBox linear_image(const Mat3& m) const;

    bool is_rectangular(double tol = 1e-9) const;

    /// Same orientation, reciprocal edge lengths, centered at the origin.
    /// Requires a rectangular box with positive lengths.
    OrientedBox dual() const;

private:
    Vec3 center_;
    Mat3 edges_;
    Mat3 inv_edges_;
    Role role_ = Role::Generic;
    std::optional<Interval> interval_;
};

// ----------------------------------------------------------------------------
// Species of the twisted-cubic box zoo.  Frequency-side objects at shift c are
// T_{1,-c} images of axis boxes; spatial-side objects are A_{1,-c} images.
// Scale tuples are half-widths of the defining axis box, so full edge lengths
// carry a factor 2.
// ----------------------------------------------------------------------------

/// Frequency Vinogradov plank theta_c at scale R, associated with [c, c + R^{-1/3}]:
/// {|w1| <= R^{-1/3}, |w2 - 2c w1| <= R^{-2/3}, |w3 - 3c w2 + 3c^2 w1| <= R^{-1}} + center.
OrientedBox freq_plank(double R, double c, const Vec3& center = {});

/// Small plank Theta(sigma, s) at scale R (origin-centered):
/// {|w1| <= R^{-1/3} s^2, |w2 - 2s w1| <= R^{-2/3} s, |w3 - 3s w2 + 3s^2 w1| <= R^{-1}}.
OrientedBox small_plank(double R, double sigma, double s);

/// Truncation of theta_c to |w1| <= R^{-2/3} (the dual plate of a tube).
OrientedBox truncated_freq_plank(double R, double c, const Vec3& center = {});

/// Spatial Vinogradov plank at scale R: A_{1,-c} image of the (R^{1/3}, R^{2/3}, R) axis box.
OrientedBox spatial_plank(double R, double c, const Vec3& center = {});

/// Spatial plank of dimensions (d^{-1}, d^{-2}, d^{-3}) for the L^4 inequality.
OrientedBox spatial_plank_delta(double delta, double c, const Vec3& center = {});

/// Vinogradov tube (R^{2/3}, R^{2/3}, R):
/// {|x1 + 2c x2 + 3c^2 x3| <= R^{2/3}, |x2 + 3c x3| <= R^{2/3}, |x3| <= R} + center.
OrientedBox tube(double R, double c, const Vec3& center = {});

/// Tube of dimensions (d^{-2}, d^{-2}, d^{-3}) housing stacked L^4 planks.
OrientedBox tube_delta(double delta, double c, const Vec3& center = {});

/// Vinogradov plate (d^{-1}, d^{-2}, d^{-2}) with normal t(I):
/// {|x1 + 2c x2 + 3c^2 x3| <= d^{-1}, |x2 + 3c x3| <= d^{-2}, |x3| <= d^{-2}} + center.
OrientedBox plate(double delta, double c, const Vec3& center = {});

/// Rectangular box along the Frenet frame at c with given half-widths.
OrientedBox frenet_box(double c, const Vec3& half_widths, const Vec3& center = {},
                       Role role = Role::Generic,
                       std::optional<Interval> interval = std::nullopt);

/// Generic constructor keyed on role, per the standard dimension tables.
/// `scale` is R for FreqPlank/SpatialPlank/Tube/SmallPlank and delta for Plate.
/// SmallPlank additionally takes sigma (R^{-1/3} <= sigma <= 1).
OrientedBox make_box(Role role, double interval_left, double scale, const Vec3& center = {},
                     double sigma = 1.0);

}  // namespace vinlab::geom
