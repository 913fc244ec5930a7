#include "vinlab/fourier/moments.hpp"

#include <cmath>
#include <stdexcept>

#include "vinlab/harness/parallel.hpp"
#include "vinlab/harness/rng.hpp"

namespace vinlab::fourier {

using geom::Vec3;

namespace {

constexpr int kBatches = 32;

double weight300(const Vec3& x, double R) {
    const double r = norm(x) / R;
    return std::pow(1.0 + r, -300.0);
}

}  // namespace

MomentEstimate lp_moment(const ExpSum& sum, double p, double R, Sampler sampler, long samples,
                         std::uint64_t seed, bool weighted, int threads) {
    if (!(p >= 1.0)) throw std::domain_error("lp_moment: p must be >= 1");

    MomentEstimate est;
    est.p = p;
    est.R = R;
    est.sampler = sampler;
    est.weighted = weighted;

    if (sampler == Sampler::Lattice) {
        if (std::abs(p - 2.0) > 1e-12) {
            throw std::domain_error("lattice sampler is the exact p = 2 quadrature only");
        }
        if (!sum.on_center_grid) {
            throw std::domain_error("lattice sampler requires center-grid frequencies");
        }
        // x1 sweep over one commensurate period: frequency gaps are multiples
        // of the interval length d, so an m-point grid of step 1/(d m) kills
        // every cross term exactly.
        const long m = sum.interval_count();
        const double step = 1.0 / (sum.interval_length() * static_cast<double>(m));
        std::vector<Vec3> pts;
        pts.reserve(static_cast<std::size_t>(m));
        for (long k = 0; k < m; ++k) {
            pts.push_back({static_cast<double>(k) * step, 0.0, 0.0});
        }
        std::vector<Complex> vals;
        eval_batch(sum, pts, vals);
        double acc = 0.0;
        for (const auto& v : vals) acc += std::norm(v);
        est.value = std::sqrt(acc / static_cast<double>(m));
        est.stderr_ = 0.0;
        est.samples = m;
        return est;
    }

    if (samples < 1000) {
        throw std::domain_error("lp_moment: Monte Carlo budget below 10^3 samples refused");
    }

    const long per_batch = samples / kBatches;
    harness::Rng root(seed);

    struct BatchOut {
        double num = 0.0;
        double den = 0.0;
    };
    const auto batches = harness::parallel_map<BatchOut>(
        kBatches, threads, [&](std::size_t b) {
            harness::Rng rng = root.stream(static_cast<std::uint64_t>(b));
            std::vector<Vec3> pts(static_cast<std::size_t>(per_batch));
            for (auto& x : pts) {
                x = {R * rng.next_symmetric(), R * rng.next_symmetric(), R * rng.next_symmetric()};
            }
            std::vector<Complex> vals;
            eval_batch(sum, pts, vals);
            BatchOut out;
            for (std::size_t i = 0; i < pts.size(); ++i) {
                const double w = weighted ? weight300(pts[i], R) : 1.0;
                out.num += w * std::pow(std::abs(vals[i]), p);
                out.den += w;
            }
            return out;
        });

    std::vector<double> means;
    means.reserve(kBatches);
    double num = 0.0, den = 0.0;
    for (const auto& b : batches) {
        means.push_back(b.num / b.den);
        num += b.num;
        den += b.den;
    }
    const double mean = num / den;
    double var = 0.0;
    for (double m : means) var += (m - mean) * (m - mean);
    var /= static_cast<double>(kBatches - 1);
    const double se_mean = std::sqrt(var / kBatches);

    est.value = std::pow(mean, 1.0 / p);
    // Delta method for the p-th root.
    est.stderr_ = mean > 0.0 ? est.value * se_mean / (p * mean) : 0.0;
    est.samples = per_batch * kBatches;
    return est;
}

}  // namespace vinlab::fourier
