#include "vinlab/partition/layers.hpp"

#include <cmath>
#include <stdexcept>

namespace vinlab::partition {

bool is_dyadic(double x) {
    if (!(x > 0.0)) return false;
    int e = 0;
    return std::frexp(x, &e) == 0.5;
}

namespace {

/// Exact R^{-1/3} for R a power of 8; std::pow alone lands a few ulps off.
double exact_inv_cbrt(double R) {
    const double root = std::round(std::cbrt(R));
    if (std::abs(root * root * root - R) > 1e-6 * R) {
        throw std::domain_error("scale must be a power of 8 (dyadic R^{1/3})");
    }
    return 1.0 / root;
}

}  // namespace

CpFamily::CpFamily(double R, double sigma) : R_(R), sigma_(sigma) {
    if (!is_dyadic(sigma)) throw std::domain_error("CpFamily: sigma must be dyadic");
    const double r13 = exact_inv_cbrt(R);
    if (!(sigma >= r13 * (1.0 - 1e-9) && sigma <= 1.0)) {
        throw std::domain_error("CpFamily: sigma must lie in [R^{-1/3}, 1]");
    }
    spacing_ = r13 / sigma;
    const int count = static_cast<int>(std::floor(1.0 / spacing_ + 1e-9)) + 1;
    planks_.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        planks_.push_back(geom::small_plank(R, sigma, shift(k)));
    }
}

std::vector<int> CpFamily::associated(double c) const {
    std::vector<int> out;
    for (int k = 0; k < size(); ++k) {
        if (std::abs(shift(k) - c) <= spacing_ * (1.0 + 1e-12)) out.push_back(k);
    }
    return out;
}

CpFamily build_cp_family(double R, double sigma) { return CpFamily(R, sigma); }

PartitionIndex::PartitionIndex(double R) : R_(R) {
    const double r13 = exact_inv_cbrt(R);
    if (!is_dyadic(r13)) {
        throw std::domain_error("PartitionIndex: R must be a power of 8 (dyadic R^{1/3})");
    }
    directions_ = static_cast<int>(std::lround(1.0 / r13));
    thetas_.reserve(static_cast<std::size_t>(directions_));
    for (int k = 0; k < directions_; ++k) {
        thetas_.push_back(geom::freq_plank(R, k * r13));
    }
    for (double sigma = r13; sigma <= 1.0 + 1e-12; sigma *= 2.0) {
        families_.emplace_back(R, sigma);
    }
}

bool PartitionIndex::in_union(const geom::Vec3& w) const {
    for (const auto& th : thetas_) {
        if (th.contains(w, 1.0, 1e-12)) return true;
    }
    return false;
}

Classification PartitionIndex::classify(const geom::Vec3& w, const PartitionParams& params) const {
    Classification out;
    if (!in_union(w)) return out;

    for (const auto& fam : families_) {
        int best = -1;
        double best_margin = -1.0;
        int mult = 0;
        bool in_layer = false;
        for (int k = 0; k < fam.size(); ++k) {
            const geom::Vec3 u = fam.plank(k).to_box_coords(w);
            const double reach = 2.0 * norm_inf(u);  // smallest dilation containing w
            if (reach <= params.layer_factor * (1.0 + 1e-12)) in_layer = true;
            if (reach <= params.membership_factor * (1.0 + 1e-12)) {
                ++mult;
                const double margin = params.membership_factor - reach;
                if (margin > best_margin) {
                    best_margin = margin;
                    best = k;
                }
            }
        }
        if (in_layer) {
            out.status = ClassifyStatus::Ok;
            out.sigma = fam.sigma();
            out.theta_index = best;
            out.multiplicity = mult;
            return out;
        }
    }

    // In some theta_I but in no layer at this enlargement; callers see the gap
    // through the coverage statistic.
    out.status = ClassifyStatus::NotInUnion;
    return out;
}

Classification classify_point(const geom::Vec3& w, double R, const PartitionParams& params) {
    return PartitionIndex(R).classify(w, params);
}

}  // namespace vinlab::partition
