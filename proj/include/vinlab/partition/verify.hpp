#pragma once

#include <cstdint>
#include <vector>

#include "vinlab/partition/layers.hpp"

namespace vinlab::partition {

struct LayerStats {
    double sigma = 0.0;
    long points = 0;
    int max_multiplicity = 0;
};

struct PartitionReport {
    double R = 0.0;
    long samples = 0;
    std::uint64_t seed = 0;
    double layer_factor = 0.0;
    double membership_factor = 0.0;

    long association_checks = 0;   // (sample, associated small plank) pairs tested
    long association_violations = 0;
    double worst_needed_factor = 0.0;  // smallest enlargement containing every tested pair

    double coverage = 0.0;  // fraction of sampled union points assigned a layer
    int max_multiplicity = 0;
    std::vector<LayerStats> layers;
};

/// Samples points from random origin-centered frequency planks, classifies
/// them into dyadic layers, and checks that every point of theta_c assigned to
/// layer sigma lies in (membership_factor) * Theta for each associated small
/// plank of CP_sigma.  Also records the 49-enlargement multiplicities.
PartitionReport verify_partition_lemmas(double R, long samples, std::uint64_t seed,
                                        const PartitionParams& params = {});

}  // namespace vinlab::partition
