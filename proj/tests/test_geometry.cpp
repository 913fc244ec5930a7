#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "vinlab/geom/frame.hpp"
#include "vinlab/geom/polytope.hpp"
#include "vinlab/geom/serialize.hpp"
#include "vinlab/geom/shear.hpp"
#include "vinlab/harness/rng.hpp"

using namespace vinlab::geom;
using vinlab::harness::Rng;

namespace {

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

Mat3 diff(const Mat3& a, const Mat3& b) {
    return {a.col(0) - b.col(0), a.col(1) - b.col(1), a.col(2) - b.col(2)};
}

}  // namespace

TEST_CASE("frenet frame at the endpoints") {
    const Frame f0 = frenet_frame(0.0);
    CHECK(norm(f0.tangent - Vec3{1, 0, 0}) < 1e-15);
    CHECK(norm(f0.normal - Vec3{0, 1, 0}) < 1e-15);
    CHECK(norm(f0.binormal - Vec3{0, 0, 1}) < 1e-15);

    const Frame f1 = frenet_frame(1.0);
    CHECK(norm(f1.raw_tangent - Vec3{1, 2, 3}) < 1e-15);
    CHECK(norm(f1.raw_binormal - Vec3{3, -3, 1}) < 1e-15);
}

TEST_CASE("raw tangent and binormal are orthogonal for every parameter") {
    Rng rng(7);
    for (int k = 0; k < 200; ++k) {
        const Frame f = frenet_frame(rng.next_double());
        CHECK(std::abs(dot(f.raw_tangent, f.raw_binormal)) < 1e-14);
        CHECK(std::abs(dot(f.tangent, f.normal)) < 1e-12);
        CHECK(std::abs(dot(f.tangent, f.binormal)) < 1e-12);
        CHECK(std::abs(dot(f.normal, f.binormal)) < 1e-12);
        // Right-handed: t x n = b.
        CHECK(norm(cross(f.tangent, f.normal) - f.binormal) < 1e-12);
    }
}

TEST_CASE("frame rejects parameters outside the unit interval") {
    CHECK_THROWS_AS(frenet_frame(-0.1), std::domain_error);
    CHECK_THROWS_AS(frenet_frame(1.1), std::domain_error);
}

TEST_CASE("series normal deviates from the exact normal at fourth order") {
    // Second component of the exact cross product is 1 - 9c^4, not 1 - c^4.
    const double c = 0.3;
    const Frame f = frenet_frame(c);
    const Vec3 exact_raw = cross(f.raw_binormal, f.raw_tangent);
    CHECK(std::abs(exact_raw.y - (1.0 - 9.0 * std::pow(c, 4))) < 1e-12);
    const Vec3 series = approx_normal(c);
    CHECK(std::abs(dot(series, f.raw_tangent)) > 1e-6);       // not exactly orthogonal
    CHECK(norm(normalized(series) - f.normal) < 10.0 * std::pow(c, 3));
}

TEST_CASE("frame orientation drifts slowly across an interval") {
    for (double R : {512.0, 4096.0}) {
        const double step = std::pow(R, -1.0 / 3.0);
        Rng rng(11);
        for (int k = 0; k < 100; ++k) {
            const double c = rng.next_double() * (1.0 - step);
            const double cp = c + step * rng.next_double();
            const Frame a = frenet_frame(c);
            const Frame b = frenet_frame(cp);
            for (std::size_t i = 0; i < 3; ++i) {
                const double angle = std::acos(std::min(1.0, dot(a.axis(i), b.axis(i))));
                CHECK(angle <= 10.0 * step);
            }
        }
    }
}

TEST_CASE("shear map formulas") {
    const ShearMap id = shear_map(1.0, 0.0);
    CHECK(max_abs(diff(id.forward, Mat3::identity())) < 1e-15);

    // T_{1,-1} maps e1 onto the curve tangent direction at 1.
    const ShearMap m = shear_map(1.0, -1.0);
    CHECK(norm(m.apply({1, 0, 0}) - Vec3{1, 2, 3}) < 1e-15);

    for (double c : {0.0, 0.3, 1.0}) {
        CHECK(std::abs(shear_map(1.0, c).inv_transpose.det() - 1.0) < 1e-12);
    }
    CHECK_THROWS_AS(shear_map(0.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(shear_map(-1.0, 0.5), std::domain_error);
}

TEST_CASE("inverse-transpose relation and pairing invariance") {
    Rng rng(3);
    for (int k = 0; k < 1000; ++k) {
        const double sigma = std::exp(2.0 * rng.next_symmetric());
        const double c = 2.0 * rng.next_symmetric();
        const ShearMap m = shear_map(sigma, c);

        const Mat3 a_expected = m.forward.inverse().transposed();
        CHECK(max_abs(diff(m.inv_transpose, a_expected)) / max_abs(a_expected) < 1e-12);

        CHECK(rel_diff(m.forward.det(), std::pow(sigma, -6.0)) < 1e-12);
        CHECK(rel_diff(m.inv_transpose.det(), std::pow(sigma, 6.0)) < 1e-12);

        const Vec3 w{rng.next_symmetric(), rng.next_symmetric(), rng.next_symmetric()};
        const Vec3 x{rng.next_symmetric(), rng.next_symmetric(), rng.next_symmetric()};
        CHECK(std::abs(dot(m.apply(w), m.apply_dual(x)) - dot(w, x)) <
              1e-10 * (1.0 + std::abs(dot(w, x))));
    }
}

TEST_CASE("shear group structure at sigma = 1") {
    const ShearMap a = shear_map(1.0, 0.4);
    const ShearMap b = shear_map(1.0, -0.4);
    CHECK(max_abs(diff(a.forward * b.forward, Mat3::identity())) < 1e-14);
}

TEST_CASE("affine shear renormalizes the curve over a subinterval") {
    const double c = 0.37, delta = 0.21;
    const AffineShear t = affine_shear(delta, c);
    CHECK(norm(t.apply(curve_point(c))) < 1e-12);
    for (double s : {0.1, 0.5, 0.9}) {
        CHECK(norm(t.apply(curve_point(c + delta * s)) - curve_point(s)) < 1e-10);
    }
}

TEST_CASE("base plank is the stated axis box") {
    const double R = 512.0;
    const OrientedBox theta0 = freq_plank(R, 0.0);
    const double r13 = std::pow(R, -1.0 / 3.0), r23 = std::pow(R, -2.0 / 3.0);
    CHECK(theta0.contains({r13 * 0.999, 0, 0}));
    CHECK(!theta0.contains({r13 * 1.001, 0, 0}));
    CHECK(theta0.contains({0, r23 * 0.999, 0}));
    CHECK(!theta0.contains({0, r23 * 1.001, 0}));
    CHECK(theta0.contains({0, 0, 0.999 / R}));
    CHECK(!theta0.contains({0, 0, 1.001 / R}));
}

TEST_CASE("small plank at sigma = 1 equals the base plank") {
    const double R = 512.0;
    const OrientedBox a = small_plank(R, 1.0, 0.0);
    const OrientedBox b = freq_plank(R, 0.0);
    CHECK(max_abs(diff(a.edges(), b.edges())) < 1e-15);
}

TEST_CASE("small planks are shear images of the base small plank") {
    const double R = 4096.0;
    Rng rng(5);
    for (int k = 0; k < 50; ++k) {
        const double sigma = std::pow(2.0, -static_cast<double>(rng.next_below(4)));
        const double s = rng.next_double();
        const OrientedBox base = small_plank(R, sigma, 0.0);
        const OrientedBox moved = small_plank(R, sigma, s);
        const Mat3 expected = shear_map(1.0, -s).forward * base.edges();
        CHECK(max_abs(diff(moved.edges(), expected)) < 1e-12 * max_abs(expected));
    }
}

TEST_CASE("sheared plank membership matches its defining inequalities") {
    const double R = 512.0;
    const double c = 0.625;
    const OrientedBox theta = freq_plank(R, c);
    const double r13 = std::pow(R, -1.0 / 3.0), r23 = std::pow(R, -2.0 / 3.0);
    Rng rng(17);
    for (int k = 0; k < 2000; ++k) {
        const Vec3 w{2.0 * r13 * rng.next_symmetric(), 4.0 * c * r13 * rng.next_symmetric(),
                     8.0 * c * c * r13 * rng.next_symmetric()};
        const bool direct = std::abs(w.x) <= r13 && std::abs(w.y - 2 * c * w.x) <= r23 &&
                            std::abs(w.z - 3 * c * w.y + 3 * c * c * w.x) <= 1.0 / R;
        CHECK(theta.contains(w, 1.0, 1e-12) == direct);
    }
}

TEST_CASE("dual box examples") {
    // Dual of the unit cube is the unit cube.
    const OrientedBox cube = OrientedBox::cube({0, 0, 0}, 1.0);
    CHECK(max_abs(diff(cube.dual().edges(), cube.edges())) < 1e-15);

    // Frequency and spatial planks of one interval are dual up to the
    // half-width convention (lengths pick up the factor 2 twice).
    const double R = 4096.0;
    const OrientedBox theta = frenet_box(0.3, {std::pow(R, -1.0 / 3.0), std::pow(R, -2.0 / 3.0),
                                               1.0 / R});
    const OrientedBox p = frenet_box(0.3, {std::pow(R, 1.0 / 3.0), std::pow(R, 2.0 / 3.0), R});
    const Vec3 d = theta.dual().lengths();
    const Vec3 pl = p.lengths();
    CHECK(rel_diff(4.0 * d.x, pl.x) < 1e-12);
    CHECK(rel_diff(4.0 * d.y, pl.y) < 1e-12);
    CHECK(rel_diff(4.0 * d.z, pl.z) < 1e-12);

    // At c = 0 the tube is an axis box; its dual is the truncated plank.
    const OrientedBox t0 = tube(R, 0.0);
    const OrientedBox tbar = truncated_freq_plank(R, 0.0);
    const Vec3 dual_l = t0.dual().lengths();
    const Vec3 bar_l = tbar.lengths();
    CHECK(rel_diff(4.0 * dual_l.x, bar_l.x) < 1e-12);
    CHECK(rel_diff(4.0 * dual_l.y, bar_l.y) < 1e-12);
    CHECK(rel_diff(4.0 * dual_l.z, bar_l.z) < 1e-12);

    CHECK_THROWS_AS(tube(R, 0.5).dual(), std::domain_error);  // sheared, not rectangular
}

TEST_CASE("dual is an involution on random rectangular boxes") {
    Rng rng(23);
    for (int k = 0; k < 1000; ++k) {
        const Vec3 raw{1.0 + rng.next_double(), rng.next_symmetric(), rng.next_symmetric()};
        const Vec3 helper{rng.next_symmetric(), 1.0 + rng.next_double(), rng.next_symmetric()};
        const Vec3 a0 = normalized(raw);
        const Vec3 a2 = normalized(cross(a0, helper));
        const Vec3 a1 = cross(a2, a0);
        const Vec3 len{std::exp(3.0 * rng.next_symmetric()), std::exp(3.0 * rng.next_symmetric()),
                       std::exp(3.0 * rng.next_symmetric())};
        const auto box = OrientedBox::rectangular(
            {rng.next_symmetric(), rng.next_symmetric(), rng.next_symmetric()}, {a0, a1, a2},
            len);
        const Vec3 twice = box.dual().dual().lengths();
        CHECK(norm_inf(twice - len) < 1e-12 * norm_inf(len));
    }
}

TEST_CASE("make_box dispatch and validation") {
    const double R = 4096.0;
    CHECK(make_box(Role::FreqPlank, 0.25, R).role() == Role::FreqPlank);
    CHECK(make_box(Role::SpatialPlank, 0.25, R).role() == Role::SpatialPlank);
    CHECK(make_box(Role::Tube, 0.25, R).role() == Role::Tube);
    CHECK(make_box(Role::Plate, 0.25, 0.125).role() == Role::Plate);
    CHECK(make_box(Role::SmallPlank, 0.25, R, {}, 0.125).role() == Role::SmallPlank);
    CHECK_THROWS_AS(make_box(Role::SmallPlank, 0.25, R, {}, std::pow(R, -1.0 / 3.0) / 4.0),
                    std::domain_error);
    CHECK_THROWS_AS(make_box(Role::FatPlate, 0.25, R), std::domain_error);
    CHECK_THROWS_AS(freq_plank(0.5, 0.0), std::domain_error);
}

TEST_CASE("polytope volume: cubes, halves and slivers") {
    const OrientedBox cube = OrientedBox::cube({0.5, 0.5, 0.5}, 1.0);
    const auto faces = cube.halfspaces();
    ConvexPolytope p(std::vector<HalfSpace>(faces.begin(), faces.end()));
    CHECK(std::abs(polytope_volume(p) - 1.0) < 1e-12);

    ConvexPolytope half = p;
    half.clip({{1, 0, 0}, 0.5});
    CHECK(std::abs(polytope_volume(half) - 0.5) < 1e-12);

    // Clipping never increases the volume.
    ConvexPolytope clipped = half;
    clipped.clip({{0, 1, 0}, 0.25});
    CHECK(polytope_volume(clipped) <= polytope_volume(half) + 1e-12);

    // Face-touching plank pair: sliver floor reports zero.
    ConvexPolytope touch = p;
    touch.clip({{-1, 0, 0}, -1.0});  // x >= 1: only the boundary face remains
    CHECK(polytope_volume(touch) == 0.0);
}

TEST_CASE("random simplex volume matches the determinant formula") {
    Rng rng(31);
    for (int k = 0; k < 50; ++k) {
        Vec3 v[4];
        double det;
        do {
            for (auto& p : v) {
                p = {rng.next_symmetric(), rng.next_symmetric(), rng.next_symmetric()};
            }
            det = dot(v[1] - v[0], cross(v[2] - v[0], v[3] - v[0]));
        } while (std::abs(det) < 0.05);
        const double expected = std::abs(det) / 6.0;

        const Vec3 centroid = (v[0] + v[1] + v[2] + v[3]) / 4.0;
        std::vector<HalfSpace> faces;
        const int tri[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
        for (const auto& f : tri) {
            Vec3 n = cross(v[f[1]] - v[f[0]], v[f[2]] - v[f[0]]);
            n = normalized(n);
            if (dot(n, centroid - v[f[0]]) > 0) n = -n;
            faces.push_back({n, dot(n, v[f[0]])});
        }
        const double vol = polytope_volume(ConvexPolytope(faces));
        CHECK(std::abs(vol - expected) < 1e-12 * std::max(1.0, expected));
    }
}

TEST_CASE("unbounded polytopes are rejected without bounds") {
    ConvexPolytope slab(std::vector<HalfSpace>{{{1, 0, 0}, 1.0}, {{-1, 0, 0}, 1.0}});
    CHECK_THROWS_AS(polytope_volume(slab), std::domain_error);
    slab.set_bounds({{-2, -2, -2}, {2, 2, 2}});
    CHECK(std::abs(polytope_volume(slab) - 2.0 * 4.0 * 4.0) < 1e-9);
}

TEST_CASE("box self-intersection reproduces the box volume") {
    Rng rng(41);
    for (int k = 0; k < 20; ++k) {
        const double c = rng.next_double();
        const OrientedBox plank = spatial_plank_delta(0.125, c, {1.0, -2.0, 3.0});
        const double vol = intersect_boxes({plank, plank}).volume();
        CHECK(std::abs(vol - plank.volume()) < 1e-9 * plank.volume());
    }
}

TEST_CASE("pair intersection volume follows the reciprocal-gap law") {
    // |P_0 cap P_D| ~ d^{-1} (d^{-1}/D)(d^{-2}/D) within a uniform band.
    double lo = 1e300, hi = 0.0;
    for (double delta : {0.125, 0.0625}) {
        for (double D = 2.0 * delta; D <= 0.5 + 1e-12; D *= 2.0) {
            const auto p0 = spatial_plank_delta(delta, 0.0);
            const auto p1 = spatial_plank_delta(delta, D);
            const double vol = intersect_boxes({p0, p1}).volume();
            const double dinv = 1.0 / delta;
            const double formula = dinv * (dinv / D) * (dinv * dinv / D);
            lo = std::min(lo, vol / formula);
            hi = std::max(hi, vol / formula);
        }
    }
    CHECK(lo >= 1.0 / 64.0);
    CHECK(hi <= 64.0);
}

TEST_CASE("triple intersection volume law on a small grid") {
    const double delta = 0.125;
    double lo = 1e300, hi = 0.0;
    for (double D2 = delta; D2 <= 0.5 + 1e-12; D2 *= 2.0) {
        for (double D3 = delta; D3 <= D2 + 1e-12; D3 *= 2.0) {
            const auto p1 = spatial_plank_delta(delta, 0.0);
            const auto p2 = spatial_plank_delta(delta, D2);
            const auto p3 = spatial_plank_delta(delta, D3);
            const double vol = intersect_boxes({p1, p2, p3}).volume();
            const double dinv = 1.0 / delta;
            const double formula =
                dinv * (dinv / (D2 + delta)) * (dinv / ((D3 + delta) * (D2 - D3 + delta)));
            lo = std::min(lo, vol / formula);
            hi = std::max(hi, vol / formula);
        }
    }
    CHECK(lo >= 1.0 / 64.0);
    CHECK(hi <= 64.0);
}

TEST_CASE("disjoint boxes intersect emptily") {
    const OrientedBox a = OrientedBox::cube({0, 0, 0}, 1.0);
    const OrientedBox b = OrientedBox::cube({5, 0, 0}, 1.0);
    CHECK(intersect_boxes({a, b}).volume() == 0.0);
    CHECK_THROWS_AS(intersect_boxes({}), std::invalid_argument);
}

TEST_CASE("box JSON record carries the fixed field names") {
    const auto j = to_json(freq_plank(512.0, 0.25));
    CHECK(j.contains("center"));
    CHECK(j.contains("axes"));
    CHECK(j.contains("lengths"));
    CHECK(j.contains("role"));
    CHECK(j.contains("interval"));
    CHECK(j["role"] == "freq_plank");
    CHECK(role_from_name(j["role"].get<std::string>()) == Role::FreqPlank);
}
