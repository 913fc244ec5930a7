#pragma once

#include <cstdint>
#include <vector>

#include "vinlab/fourier/moments.hpp"

namespace vinlab::fourier {

struct RatioEstimate {
    double value = 0.0;
    double stderr_ = 0.0;
};

/// Single-frequency-per-interval decoupling quotient at exponent p:
///   D = ||F||_{L^p avg(B_R)} / (R^{alpha(1/2 - 1/p)} (sum_J |a_J|^p)^{1/p}).
/// A lone nonzero coefficient gives exactly R^{-alpha(1/2 - 1/p)}.
RatioEstimate decoupling_ratio(const ExpSum& sum, double p, double R, long samples,
                               std::uint64_t seed, int threads = 1);

/// ||(F_1 F_2 F_3)^{1/3}||_{L^p avg} over the same right-hand normalization,
/// with F_i the projections to the blocks [0,1/6], [1/3,1/2], [2/3,1].
RatioEstimate trilinear_ratio(const ExpSum& sum, double p, double R, long samples,
                              std::uint64_t seed, int threads = 1);

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
};

/// Least-squares slope of log(value) against log(scale).
SlopeFit fit_log_slope(const std::vector<double>& scales, const std::vector<double>& values);

struct FlatDecouplingReport {
    int L = 0;
    double p = 0.0;
    int trials = 0;
    double max_ratio = 0.0;
};

/// One-dimensional flat decoupling check: band of L*K integer frequencies
/// partitioned into L congruent blocks,
///   ||f||_p <= C L^{1-2/p} (sum_i ||P_i f||_p^p)^{1/p},
/// over random-coefficient trials plus the all-ones spike.  Norms are
/// periodic-grid quadratures; reports the worst observed quotient C.
FlatDecouplingReport flat_decoupling_check(int L, double p, int trials, std::uint64_t seed,
                                           int block_size = 8);

}  // namespace vinlab::fourier
