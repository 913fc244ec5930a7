#pragma once

#include <cstdint>
#include <string>

#include "vinlab/fourier/exp_sum.hpp"

namespace vinlab::fourier {

enum class Sampler { MonteCarlo, Lattice };

struct MomentEstimate {
    double p = 0.0;
    double R = 0.0;
    double value = 0.0;    // (average of |F|^p over [-R, R]^3)^{1/p}
    double stderr_ = 0.0;  // of `value`, via batch means
    long samples = 0;
    Sampler sampler = Sampler::MonteCarlo;
    bool weighted = false;
};

/// Normalized L^p average of |F| over the box [-R, R]^3.
///
/// MonteCarlo: uniform points, 32 batch means, optionally weighted by
/// w(x) = (1 + |x|/R)^{-300}.  Refuses budgets below 10^3 samples.
///
/// Lattice: exact p = 2 quadrature sweeping the commensurate x1 grid (valid
/// only for center-grid frequencies); stderr 0.
MomentEstimate lp_moment(const ExpSum& sum, double p, double R, Sampler sampler, long samples,
                         std::uint64_t seed, bool weighted = false, int threads = 1);

}  // namespace vinlab::fourier
