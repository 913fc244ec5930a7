#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "vinlab/geom/vec3.hpp"

namespace vinlab::fourier {

using Complex = std::complex<double>;

/// Exponential sum F(x) = sum_J a_J e(x . xi_J) with one frequency per
/// interval J of the length-R^{-alpha} partition of [0, 1].  Frequencies sit
/// on the moment curve gamma(t) = (t, t^2, t^3), by default at interval
/// centers, optionally jittered inside the isotropic R^{-1} neighborhood.
struct ExpSum {
    double R = 0.0;
    double alpha = 0.5;
    std::vector<Complex> coeffs;
    std::vector<geom::Vec3> freqs;
    bool on_center_grid = true;  // enables the finite-difference evaluator

    long interval_count() const { return static_cast<long>(coeffs.size()); }
    double interval_length() const { return std::pow(R, -alpha); }
    double center(long j) const { return (static_cast<double>(j) + 0.5) * interval_length(); }

    /// Unit coefficients on every interval.
    static ExpSum constant(double R, double alpha);
    /// Independent uniform phases on every interval.
    static ExpSum random_phases(double R, double alpha, std::uint64_t seed);
    /// One nonzero coefficient.
    static ExpSum single(double R, double alpha, long j, Complex a = {1.0, 0.0});

    /// Zero out all intervals not contained in [lo, hi].
    void restrict_to_block(double lo, double hi);
    /// Keep only intervals inside the three separated thirds-of-thirds blocks.
    void restrict_to_trilinear_blocks();

    /// Move each frequency inside the isotropic R^{-1} tube around the curve.
    void add_jitter(double magnitude, std::uint64_t seed);
};

Complex eval(const ExpSum& sum, const geom::Vec3& x);

/// F at many points; uses the cubic finite-difference cascade (three complex
/// multiplies per term) when the frequencies are the exact center grid.
void eval_batch(const ExpSum& sum, const std::vector<geom::Vec3>& points,
                std::vector<Complex>& out);

}  // namespace vinlab::fourier
