#include "vinlab/partition/verify.hpp"

#include <cmath>

#include "vinlab/harness/rng.hpp"

namespace vinlab::partition {

using geom::Vec3;

PartitionReport verify_partition_lemmas(double R, long samples, std::uint64_t seed,
                                        const PartitionParams& params) {
    const PartitionIndex index(R);
    const double r13 = std::pow(R, -1.0 / 3.0);

    PartitionReport rep;
    rep.R = R;
    rep.samples = samples;
    rep.seed = seed;
    rep.layer_factor = params.layer_factor;
    rep.membership_factor = params.membership_factor;
    for (int i = 0; i < index.layer_count(); ++i) {
        rep.layers.push_back({index.family(i).sigma(), 0, 0});
    }

    harness::Rng root(seed);
    long classified = 0;

    for (long s = 0; s < samples; ++s) {
        harness::Rng rng = root.stream(static_cast<std::uint64_t>(s));
        const int dir = static_cast<int>(rng.next_below(
            static_cast<std::uint64_t>(index.direction_count())));
        const geom::OrientedBox& theta = index.theta(dir);
        const Vec3 u{0.5 * rng.next_symmetric(), 0.5 * rng.next_symmetric(),
                     0.5 * rng.next_symmetric()};
        const Vec3 w = theta.center() + theta.edges() * u;

        const Classification cls = index.classify(w, params);
        if (cls.status != ClassifyStatus::Ok) continue;
        ++classified;

        int layer_idx = 0;
        for (int i = 0; i < index.layer_count(); ++i) {
            if (index.family(i).sigma() == cls.sigma) layer_idx = i;
        }
        auto& ls = rep.layers[static_cast<std::size_t>(layer_idx)];
        ++ls.points;
        ls.max_multiplicity = std::max(ls.max_multiplicity, cls.multiplicity);
        rep.max_multiplicity = std::max(rep.max_multiplicity, cls.multiplicity);

        // Association check: w in theta_c assigned to layer sigma must lie in
        // f * Theta for every small plank associated with theta_c.
        const CpFamily& fam = index.family(layer_idx);
        const double c = dir * r13;
        for (int k : fam.associated(c)) {
            ++rep.association_checks;
            const Vec3 bc = fam.plank(k).to_box_coords(w);
            const double needed = 2.0 * norm_inf(bc);
            rep.worst_needed_factor = std::max(rep.worst_needed_factor, needed);
            if (needed > params.membership_factor * (1.0 + 1e-12)) {
                ++rep.association_violations;
            }
        }
    }

    rep.coverage = samples > 0 ? static_cast<double>(classified) / static_cast<double>(samples)
                               : 0.0;
    return rep;
}

}  // namespace vinlab::partition
