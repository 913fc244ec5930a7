#include "vinlab/incidence/l4.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "vinlab/geom/polytope.hpp"
#include "vinlab/harness/rng.hpp"

namespace vinlab::incidence {

using geom::OrientedBox;
using geom::Vec3;

std::vector<OrientedBox> centered_plank_family(double delta) {
    const long n = std::lround(1.0 / delta);
    std::vector<OrientedBox> out;
    out.reserve(static_cast<std::size_t>(n));
    for (long k = 0; k < n; ++k) {
        out.push_back(geom::spatial_plank_delta(delta, static_cast<double>(k) * delta));
    }
    return out;
}

L4Result l4_sum_exact(const std::vector<OrientedBox>& planks, std::size_t max_planks) {
    if (planks.size() > max_planks) throw UseMonteCarlo();

    const std::size_t n = planks.size();
    L4Result res;
    res.exact = true;
    for (const auto& p : planks) res.l1 += p.volume();

    // Volume of the intersection over an index multiset, memoized; the ordered
    // quadruple sum adds each multiset with its permutation multiplicity.
    std::map<std::array<std::size_t, 4>, double> memo;
    auto quad_volume = [&](std::array<std::size_t, 4> idx) -> double {
        std::sort(idx.begin(), idx.end());
        auto it = memo.find(idx);
        if (it != memo.end()) return it->second;
        std::vector<OrientedBox> distinct;
        for (std::size_t k = 0; k < 4; ++k) {
            if (k == 0 || idx[k] != idx[k - 1]) distinct.push_back(planks[idx[k]]);
        }
        double vol;
        if (distinct.size() == 1) {
            vol = distinct[0].volume();
        } else {
            vol = geom::intersect_boxes(distinct).volume();
        }
        memo.emplace(idx, vol);
        return vol;
    };

    // Iterate sorted multisets i <= j <= k <= l and count arrangements.
    auto multiplicity = [](const std::array<std::size_t, 4>& idx) -> double {
        int runs[4] = {1, 0, 0, 0};
        int r = 0;
        for (int k = 1; k < 4; ++k) {
            if (idx[static_cast<std::size_t>(k)] == idx[static_cast<std::size_t>(k - 1)]) {
                ++runs[r];
            } else {
                ++r;
                runs[r] = 1;
            }
        }
        double denom = 1.0;
        for (int k = 0; k <= r; ++k) {
            for (int f = 2; f <= runs[k]; ++f) denom *= f;
        }
        return 24.0 / denom;
    };

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            for (std::size_t k = j; k < n; ++k) {
                for (std::size_t l = k; l < n; ++l) {
                    const std::array<std::size_t, 4> idx{i, j, k, l};
                    const double v = quad_volume(idx);
                    if (v > 0.0) res.l4 += multiplicity(idx) * v;
                }
            }
        }
    }
    return res;
}

L4Result l4_sum_monte_carlo(const std::vector<OrientedBox>& planks, long samples,
                            std::uint64_t seed) {
    L4Result res;
    res.samples = samples;
    const std::size_t n = planks.size();
    std::vector<double> volumes(n);
    for (std::size_t i = 0; i < n; ++i) {
        volumes[i] = planks[i].volume();
        res.l1 += volumes[i];
    }
    if (n == 0 || samples <= 0) return res;

    harness::Rng root(seed);
    constexpr int kBatches = 32;
    const long per_batch = std::max<long>(1, samples / kBatches);
    std::vector<double> batch_means;

    for (int b = 0; b < kBatches; ++b) {
        harness::Rng rng = root.stream(static_cast<std::uint64_t>(b));
        double acc = 0.0;
        for (long s = 0; s < per_batch; ++s) {
            const std::size_t pick = static_cast<std::size_t>(rng.next_below(n));
            const OrientedBox& p = planks[pick];
            const Vec3 u{0.5 * rng.next_symmetric(), 0.5 * rng.next_symmetric(),
                         0.5 * rng.next_symmetric()};
            const Vec3 x = p.center() + p.edges() * u;
            // Mixture density q(x) = (1/n) sum_{P containing x} 1/|P|.
            double q = 0.0;
            double k4 = 0.0;
            int count = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (planks[i].contains(x, 1.0, 1e-12)) {
                    q += 1.0 / volumes[i];
                    ++count;
                }
            }
            q /= static_cast<double>(n);
            const double kd = static_cast<double>(count);
            k4 = kd * kd * kd * kd;
            acc += k4 / q;
        }
        batch_means.push_back(acc / static_cast<double>(per_batch));
    }

    double mean = 0.0;
    for (double m : batch_means) mean += m;
    mean /= static_cast<double>(batch_means.size());
    double var = 0.0;
    for (double m : batch_means) var += (m - mean) * (m - mean);
    var /= static_cast<double>(batch_means.size() - 1);

    res.l4 = mean;
    res.stderr_ = std::sqrt(var / static_cast<double>(batch_means.size()));
    res.samples = per_batch * kBatches;
    return res;
}

}  // namespace vinlab::incidence
