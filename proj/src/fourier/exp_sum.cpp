#include "vinlab/fourier/exp_sum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "vinlab/harness/rng.hpp"

namespace vinlab::fourier {

using geom::Vec3;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline Complex unit_phase(double theta) {
    return {std::cos(kTwoPi * theta), std::sin(kTwoPi * theta)};
}

long grid_size(double R, double alpha) {
    const double n = std::pow(R, alpha);
    const long rounded = std::lround(n);
    if (std::abs(n - static_cast<double>(rounded)) > 1e-9 || rounded < 1) {
        throw std::domain_error("ExpSum: R^alpha must be a positive integer");
    }
    return rounded;
}

}  // namespace

ExpSum ExpSum::constant(double R, double alpha) {
    ExpSum s;
    s.R = R;
    s.alpha = alpha;
    const long n = grid_size(R, alpha);
    s.coeffs.assign(static_cast<std::size_t>(n), Complex{1.0, 0.0});
    s.freqs.reserve(static_cast<std::size_t>(n));
    for (long j = 0; j < n; ++j) {
        const double t = s.center(j);
        s.freqs.push_back({t, t * t, t * t * t});
    }
    return s;
}

ExpSum ExpSum::random_phases(double R, double alpha, std::uint64_t seed) {
    ExpSum s = constant(R, alpha);
    harness::Rng rng(seed);
    for (auto& a : s.coeffs) a = unit_phase(rng.next_double());
    return s;
}

ExpSum ExpSum::single(double R, double alpha, long j, Complex a) {
    ExpSum s = constant(R, alpha);
    for (long k = 0; k < s.interval_count(); ++k) {
        s.coeffs[static_cast<std::size_t>(k)] = (k == j) ? a : Complex{0.0, 0.0};
    }
    return s;
}

void ExpSum::restrict_to_block(double lo, double hi) {
    const double len = interval_length();
    for (long j = 0; j < interval_count(); ++j) {
        const double a = static_cast<double>(j) * len;
        const double b = a + len;
        if (a < lo - 1e-12 || b > hi + 1e-12) coeffs[static_cast<std::size_t>(j)] = 0.0;
    }
}

void ExpSum::restrict_to_trilinear_blocks() {
    const double len = interval_length();
    for (long j = 0; j < interval_count(); ++j) {
        const double a = static_cast<double>(j) * len;
        const double b = a + len;
        const bool in1 = a >= -1e-12 && b <= 1.0 / 6.0 + 1e-12;
        const bool in2 = a >= 1.0 / 3.0 - 1e-12 && b <= 0.5 + 1e-12;
        const bool in3 = a >= 2.0 / 3.0 - 1e-12 && b <= 1.0 + 1e-12;
        if (!(in1 || in2 || in3)) coeffs[static_cast<std::size_t>(j)] = 0.0;
    }
}

void ExpSum::add_jitter(double magnitude, std::uint64_t seed) {
    if (!(magnitude >= 0.0 && magnitude <= 1.0 / R)) {
        throw std::domain_error("add_jitter: magnitude must lie in [0, R^{-1}]");
    }
    harness::Rng rng(seed);
    for (auto& f : freqs) {
        const double phi = rng.next_double();
        const double rad = magnitude * std::sqrt(rng.next_double());
        f.y += rad * std::cos(kTwoPi * phi);
        f.z += rad * std::sin(kTwoPi * phi);
    }
    on_center_grid = false;
}

Complex eval(const ExpSum& sum, const Vec3& x) {
    std::vector<Complex> out;
    eval_batch(sum, {x}, out);
    return out[0];
}

void eval_batch(const ExpSum& sum, const std::vector<Vec3>& points, std::vector<Complex>& out) {
    out.assign(points.size(), Complex{0.0, 0.0});
    const long n = sum.interval_count();
    if (n == 0) return;

    if (!sum.on_center_grid) {
        for (std::size_t p = 0; p < points.size(); ++p) {
            Complex acc{0.0, 0.0};
            for (long j = 0; j < n; ++j) {
                const auto& a = sum.coeffs[static_cast<std::size_t>(j)];
                if (a == Complex{0.0, 0.0}) continue;
                acc += a * unit_phase(dot(points[p], sum.freqs[static_cast<std::size_t>(j)]));
            }
            out[p] = acc;
        }
        return;
    }

    // Phase p(j) = x . gamma(d(j + 1/2)) is cubic in j: advance e(p(j)) with a
    // three-level multiplicative difference cascade.
    const double d = sum.interval_length();
    for (std::size_t p = 0; p < points.size(); ++p) {
        const Vec3& x = points[p];
        auto phase = [&](double u) {
            const double t = d * u;
            return x.x * t + x.y * t * t + x.z * t * t * t;
        };
        const double p0 = phase(0.5);
        const double p1 = phase(1.5);
        const double p2 = phase(2.5);
        const double p3 = phase(3.5);
        Complex e0 = unit_phase(p0);
        Complex e1 = unit_phase(p1 - p0);
        Complex e2 = unit_phase(p2 - 2.0 * p1 + p0);
        const Complex e3 = unit_phase(p3 - 3.0 * p2 + 3.0 * p1 - p0);

        Complex acc{0.0, 0.0};
        for (long j = 0; j < n; ++j) {
            acc += sum.coeffs[static_cast<std::size_t>(j)] * e0;
            e0 *= e1;
            e1 *= e2;
            e2 *= e3;
        }
        out[p] = acc;
    }
}

}  // namespace vinlab::fourier
