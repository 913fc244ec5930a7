#include "vinlab/geom/box.hpp"

#include <cmath>
#include <stdexcept>

namespace vinlab::geom {

namespace {

constexpr const char* kRoleNames[] = {
    "freq_plank", "spatial_plank", "tube",   "plate",     "small_plank", "fat_plate",
    "box_B",      "box_Sigma",     "box_tau", "box_Lambda", "box_U",       "plate_Phi",
    "cube_Delta", "cube_Q",        "cube_q",  "generic",
};

}  // namespace

const char* role_name(Role r) { return kRoleNames[static_cast<int>(r)]; }

Role role_from_name(const std::string& name) {
    for (int i = 0; i <= static_cast<int>(Role::Generic); ++i) {
        if (name == kRoleNames[i]) return static_cast<Role>(i);
    }
    throw std::invalid_argument("unknown box role: " + name);
}

OrientedBox::OrientedBox(const Vec3& center, const Mat3& edges, Role role,
                         std::optional<Interval> interval)
    : center_(center), edges_(edges), inv_edges_(edges.inverse()), role_(role),
      interval_(interval) {
    if (!(std::abs(edges_.det()) > 0.0)) {
        throw std::domain_error("OrientedBox: degenerate edge matrix");
    }
}

OrientedBox OrientedBox::rectangular(const Vec3& center, const std::array<Vec3, 3>& axes,
                                     const Vec3& full_lengths, Role role,
                                     std::optional<Interval> interval) {
    Mat3 e{axes[0] * full_lengths.x, axes[1] * full_lengths.y, axes[2] * full_lengths.z};
    return OrientedBox(center, e, role, interval);
}

OrientedBox OrientedBox::axis_box(const Vec3& center, const Vec3& half_widths, Role role,
                                  std::optional<Interval> interval) {
    return OrientedBox(center,
                       Mat3::diagonal(2.0 * half_widths.x, 2.0 * half_widths.y,
                                      2.0 * half_widths.z),
                       role, interval);
}

OrientedBox OrientedBox::cube(const Vec3& center, double side, Role role) {
    return OrientedBox(center, Mat3::diagonal(side, side, side), role);
}

std::array<Vec3, 3> OrientedBox::axes() const {
    return {normalized(edges_.col(0)), normalized(edges_.col(1)), normalized(edges_.col(2))};
}

Vec3 OrientedBox::lengths() const {
    return {norm(edges_.col(0)), norm(edges_.col(1)), norm(edges_.col(2))};
}

bool OrientedBox::contains(const Vec3& x, double dilation, double tol) const {
    const Vec3 u = to_box_coords(x);
    const double h = 0.5 * dilation + tol;
    return std::abs(u.x) <= h && std::abs(u.y) <= h && std::abs(u.z) <= h;
}

std::array<Vec3, 8> OrientedBox::vertices(double dilation) const {
    std::array<Vec3, 8> v;
    const Vec3 h0 = half_edge(0) * dilation;
    const Vec3 h1 = half_edge(1) * dilation;
    const Vec3 h2 = half_edge(2) * dilation;
    int k = 0;
    for (int s0 : {-1, 1})
        for (int s1 : {-1, 1})
            for (int s2 : {-1, 1}) v[k++] = center_ + h0 * s0 + h1 * s1 + h2 * s2;
    return v;
}

std::array<HalfSpace, 6> OrientedBox::halfspaces(double dilation) const {
    // Face normals are the rows of edges^{-1} (the dual basis), normalized.
    std::array<HalfSpace, 6> hs;
    for (std::size_t i = 0; i < 3; ++i) {
        Vec3 n = inv_edges_.row(i);
        const double len = norm(n);
        n = n / len;
        const double half = 0.5 * dilation / len;  // distance from center to face
        const double c = dot(n, center_);
        hs[2 * i] = {n, c + half};
        hs[2 * i + 1] = {-n, -(c - half)};
    }
    return hs;
}

Aabb OrientedBox::aabb(double dilation) const {
    Vec3 r{0, 0, 0};
    for (std::size_t i = 0; i < 3; ++i) {
        const Vec3 h = half_edge(i) * dilation;
        r.x += std::abs(h.x);
        r.y += std::abs(h.y);
        r.z += std::abs(h.z);
    }
    return {center_ - r, center_ + r};
}

OrientedBox OrientedBox::dilated(double factor) const {
    return OrientedBox(center_, edges_ * factor, role_, interval_);
}

OrientedBox OrientedBox::translated(const Vec3& t) const {
    return OrientedBox(center_ + t, edges_, role_, interval_);
}

OrientedBox OrientedBox::linear_image(const Mat3& m) const {
    return OrientedBox(m * center_, m * edges_, role_, interval_);
}

bool OrientedBox::is_rectangular(double tol) const {
    const Vec3 l = lengths();
    const double s01 = std::abs(dot(edges_.col(0), edges_.col(1))) / (l.x * l.y);
    const double s02 = std::abs(dot(edges_.col(0), edges_.col(2))) / (l.x * l.z);
    const double s12 = std::abs(dot(edges_.col(1), edges_.col(2))) / (l.y * l.z);
    return s01 <= tol && s02 <= tol && s12 <= tol;
}

OrientedBox OrientedBox::dual() const {
    if (!is_rectangular()) {
        throw std::domain_error("dual: box must be rectangular");
    }
    const Vec3 l = lengths();
    if (!(l.x > 0.0 && l.y > 0.0 && l.z > 0.0)) {
        throw std::domain_error("dual: box must have positive edge lengths");
    }
    const auto a = axes();
    Mat3 e{a[0] * (1.0 / l.x), a[1] * (1.0 / l.y), a[2] * (1.0 / l.z)};
    return OrientedBox({0, 0, 0}, e, role_, interval_);
}

// ---------------------------------------------------------------------------

namespace {

void check_scale(double R, const char* who) {
    if (!(R > 1.0)) throw std::domain_error(std::string(who) + ": scale must exceed 1");
}

OrientedBox sheared_freq_box(double c, const Vec3& half_widths, const Vec3& center,
                             Role role, Interval iv) {
    const Mat3 t = shear_map(1.0, -c).forward;
    const Mat3 edges = t * Mat3::diagonal(2.0 * half_widths.x, 2.0 * half_widths.y,
                                          2.0 * half_widths.z);
    return OrientedBox(center, edges, role, iv);
}

OrientedBox sheared_spatial_box(double c, const Vec3& half_widths, const Vec3& center,
                                Role role, Interval iv) {
    const Mat3 a = shear_map(1.0, -c).inv_transpose;
    const Mat3 edges = a * Mat3::diagonal(2.0 * half_widths.x, 2.0 * half_widths.y,
                                          2.0 * half_widths.z);
    return OrientedBox(center, edges, role, iv);
}

}  // namespace

OrientedBox freq_plank(double R, double c, const Vec3& center) {
    check_scale(R, "freq_plank");
    const double r13 = std::pow(R, -1.0 / 3.0);
    return sheared_freq_box(c, {r13, std::pow(R, -2.0 / 3.0), 1.0 / R}, center,
                            Role::FreqPlank, {c, c + r13});
}

OrientedBox small_plank(double R, double sigma, double s) {
    check_scale(R, "small_plank");
    const double r13 = std::pow(R, -1.0 / 3.0);
    if (!(sigma >= r13 * (1.0 - 1e-12) && sigma <= 1.0 + 1e-12)) {
        throw std::domain_error("small_plank: sigma must lie in [R^{-1/3}, 1]");
    }
    return sheared_freq_box(s,
                            {r13 * sigma * sigma, std::pow(R, -2.0 / 3.0) * sigma, 1.0 / R},
                            {0, 0, 0}, Role::SmallPlank, {s, s + r13 / sigma});
}

OrientedBox truncated_freq_plank(double R, double c, const Vec3& center) {
    check_scale(R, "truncated_freq_plank");
    const double r23 = std::pow(R, -2.0 / 3.0);
    return sheared_freq_box(c, {r23, r23, 1.0 / R}, center, Role::Plate,
                            {c, c + std::pow(R, -1.0 / 3.0)});
}

OrientedBox spatial_plank(double R, double c, const Vec3& center) {
    check_scale(R, "spatial_plank");
    const double r13 = std::pow(R, 1.0 / 3.0);
    return sheared_spatial_box(c, {r13, std::pow(R, 2.0 / 3.0), R}, center,
                               Role::SpatialPlank, {c, c + 1.0 / r13});
}

OrientedBox spatial_plank_delta(double delta, double c, const Vec3& center) {
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::domain_error("spatial_plank_delta: need 0 < delta < 1");
    }
    const double d1 = 1.0 / delta;
    return sheared_spatial_box(c, {d1, d1 * d1, d1 * d1 * d1}, center,
                               Role::SpatialPlank, {c, c + delta});
}

OrientedBox tube(double R, double c, const Vec3& center) {
    check_scale(R, "tube");
    const double r23 = std::pow(R, 2.0 / 3.0);
    return sheared_spatial_box(c, {r23, r23, R}, center, Role::Tube,
                               {c, c + std::pow(R, -1.0 / 3.0)});
}

OrientedBox tube_delta(double delta, double c, const Vec3& center) {
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::domain_error("tube_delta: need 0 < delta < 1");
    }
    const double d2 = 1.0 / (delta * delta);
    return sheared_spatial_box(c, {d2, d2, d2 / delta}, center, Role::Tube,
                               {c, c + delta});
}

OrientedBox plate(double delta, double c, const Vec3& center) {
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::domain_error("plate: need 0 < delta < 1");
    }
    const double d1 = 1.0 / delta;
    return sheared_spatial_box(c, {d1, d1 * d1, d1 * d1}, center, Role::Plate,
                               {c, c + delta});
}

OrientedBox frenet_box(double c, const Vec3& half_widths, const Vec3& center, Role role,
                       std::optional<Interval> interval) {
    const Frame f = frenet_frame(c);
    return OrientedBox::rectangular(center, {f.tangent, f.normal, f.binormal},
                                    half_widths * 2.0, role, interval);
}

OrientedBox make_box(Role role, double interval_left, double scale, const Vec3& center,
                     double sigma) {
    switch (role) {
        case Role::FreqPlank:
            return freq_plank(scale, interval_left, center);
        case Role::SpatialPlank:
            return spatial_plank(scale, interval_left, center);
        case Role::Tube:
            return tube(scale, interval_left, center);
        case Role::Plate:
            return plate(scale, interval_left, center);
        case Role::SmallPlank:
            return small_plank(scale, sigma, interval_left);
        case Role::CubeDelta:
            return OrientedBox::cube(center, std::sqrt(scale), Role::CubeDelta);
        case Role::CubeQ:
            return OrientedBox::cube(center, std::pow(scale, 2.0 / 3.0), Role::CubeQ);
        case Role::CubeSmallQ:
            return OrientedBox::cube(center, std::pow(scale, 1.0 / 3.0), Role::CubeSmallQ);
        default:
            throw std::domain_error("make_box: role requires explicit dimensions");
    }
}

}  // namespace vinlab::geom
