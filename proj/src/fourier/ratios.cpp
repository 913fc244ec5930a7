#include "vinlab/fourier/ratios.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "vinlab/harness/parallel.hpp"
#include "vinlab/harness/rng.hpp"

namespace vinlab::fourier {

using geom::Vec3;

namespace {

double coefficient_lp(const ExpSum& sum, double p) {
    double acc = 0.0;
    for (const auto& a : sum.coeffs) acc += std::pow(std::abs(a), p);
    return std::pow(acc, 1.0 / p);
}

}  // namespace

RatioEstimate decoupling_ratio(const ExpSum& sum, double p, double R, long samples,
                               std::uint64_t seed, int threads) {
    const double rhs = coefficient_lp(sum, p);
    if (!(rhs > 0.0)) throw std::domain_error("decoupling_ratio: all coefficients vanish");
    const MomentEstimate m = lp_moment(sum, p, R, Sampler::MonteCarlo, samples, seed, false,
                                       threads);
    const double norm = std::pow(R, sum.alpha * (0.5 - 1.0 / p)) * rhs;
    return {m.value / norm, m.stderr_ / norm};
}

RatioEstimate trilinear_ratio(const ExpSum& sum, double p, double R, long samples,
                              std::uint64_t seed, int threads) {
    // Split into the three block sums.
    ExpSum f1 = sum, f2 = sum, f3 = sum;
    f1.restrict_to_block(0.0, 1.0 / 6.0);
    f2.restrict_to_block(1.0 / 3.0, 0.5);
    f3.restrict_to_block(2.0 / 3.0, 1.0);
    for (const ExpSum* f : {&f1, &f2, &f3}) {
        double mass = 0.0;
        for (const auto& a : f->coeffs) mass += std::abs(a);
        if (!(mass > 0.0)) throw std::domain_error("trilinear_ratio: empty block");
    }
    const double rhs = coefficient_lp(sum, p);
    if (!(rhs > 0.0)) throw std::domain_error("trilinear_ratio: all coefficients vanish");

    constexpr int kBatches = 32;
    const long per_batch = std::max<long>(1, samples / kBatches);
    harness::Rng root(seed);
    const auto means = harness::parallel_map<double>(kBatches, threads, [&](std::size_t b) {
        harness::Rng rng = root.stream(static_cast<std::uint64_t>(b));
        std::vector<Vec3> pts(static_cast<std::size_t>(per_batch));
        for (auto& x : pts) {
            x = {R * rng.next_symmetric(), R * rng.next_symmetric(), R * rng.next_symmetric()};
        }
        std::vector<Complex> v1, v2, v3;
        eval_batch(f1, pts, v1);
        eval_batch(f2, pts, v2);
        eval_batch(f3, pts, v3);
        double acc = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const double g = std::abs(v1[i]) * std::abs(v2[i]) * std::abs(v3[i]);
            acc += std::pow(g, p / 3.0);
        }
        return acc / static_cast<double>(per_batch);
    });

    double mean = 0.0;
    for (double m : means) mean += m;
    mean /= static_cast<double>(means.size());
    double var = 0.0;
    for (double m : means) var += (m - mean) * (m - mean);
    var /= static_cast<double>(means.size() - 1);
    const double se_mean = std::sqrt(var / static_cast<double>(means.size()));

    const double value = std::pow(mean, 1.0 / p);
    const double se = mean > 0.0 ? value * se_mean / (p * mean) : 0.0;
    const double norm = std::pow(R, sum.alpha * (0.5 - 1.0 / p)) * rhs;
    return {value / norm, se / norm};
}

SlopeFit fit_log_slope(const std::vector<double>& scales, const std::vector<double>& values) {
    if (scales.size() != values.size() || scales.size() < 2) {
        throw std::invalid_argument("fit_log_slope: need matching series of length >= 2");
    }
    const double n = static_cast<double>(scales.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < scales.size(); ++i) {
        const double x = std::log(scales[i]);
        const double y = std::log(values[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    SlopeFit fit;
    fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / n;
    return fit;
}

FlatDecouplingReport flat_decoupling_check(int L, double p, int trials, std::uint64_t seed,
                                           int block_size) {
    if (L < 1 || !(p >= 2.0)) {
        throw std::domain_error("flat_decoupling_check: need L >= 1 and p >= 2");
    }
    const int M = L * block_size;
    const int grid = 32 * M;  // periodic quadrature nodes on [0, 1)

    FlatDecouplingReport rep;
    rep.L = L;
    rep.p = p;
    rep.trials = trials;

    harness::Rng root(seed);
    std::vector<Complex> coeffs(static_cast<std::size_t>(M));

    auto lp_norm = [&](int lo, int hi) {
        // ||sum_{m in [lo, hi)} c_m e(m x)||_p over one period.
        double acc = 0.0;
        for (int g = 0; g < grid; ++g) {
            const double x = static_cast<double>(g) / grid;
            Complex f{0.0, 0.0};
            for (int m = lo; m < hi; ++m) {
                const double th = 2.0 * std::numbers::pi * m * x;
                f += coeffs[static_cast<std::size_t>(m)] * Complex{std::cos(th), std::sin(th)};
            }
            acc += std::pow(std::abs(f), p);
        }
        return std::pow(acc / grid, 1.0 / p);
    };

    auto run_case = [&]() {
        const double whole = lp_norm(0, M);
        double blocks = 0.0;
        for (int i = 0; i < L; ++i) {
            blocks += std::pow(lp_norm(i * block_size, (i + 1) * block_size), p);
        }
        const double rhs = std::pow(static_cast<double>(L), 1.0 - 2.0 / p) *
                           std::pow(blocks, 1.0 / p);
        rep.max_ratio = std::max(rep.max_ratio, whole / rhs);
    };

    // The all-ones spike saturates the flat bound.
    for (auto& c : coeffs) c = {1.0, 0.0};
    run_case();

    for (int t = 0; t < trials; ++t) {
        harness::Rng rng = root.stream(static_cast<std::uint64_t>(t));
        for (auto& c : coeffs) {
            const double th = 2.0 * std::numbers::pi * rng.next_double();
            const double r = std::sqrt(-2.0 * std::log(std::max(1e-300, rng.next_double())));
            c = {r * std::cos(th), r * std::sin(th)};
        }
        run_case();
    }
    return rep;
}

}  // namespace vinlab::fourier
