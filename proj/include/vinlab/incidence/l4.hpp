#pragma once

#include <cstdint>
#include <vector>

#include "vinlab/geom/box.hpp"

namespace vinlab::incidence {

struct L4Result {
    double l4 = 0.0;       // integral of (sum of indicators)^4
    double l1 = 0.0;       // integral of (sum of indicators)
    double stderr_ = 0.0;  // statistical error of l4 (0 for the exact method)
    long samples = 0;
    bool exact = false;

    double ratio() const { return l4 / l1; }
};

/// Thrown when the exact quadruple loop is requested beyond its size cap.
struct UseMonteCarlo : std::runtime_error {
    UseMonteCarlo() : std::runtime_error("exact L4 sum beyond size cap; use the Monte Carlo path") {}
};

/// Exact quadruple sum of intersection volumes (memoized over index multisets).
/// Refuses families with more than `max_planks` members.
L4Result l4_sum_exact(const std::vector<geom::OrientedBox>& planks, std::size_t max_planks = 32);

/// Mixture-sampled Monte Carlo estimate: draws (plank, uniform point inside),
/// weights by the inverse mixture density.  Exact l1.
L4Result l4_sum_monte_carlo(const std::vector<geom::OrientedBox>& planks, long samples,
                            std::uint64_t seed);

/// Full origin-centered family at scale delta (one plank per direction).
std::vector<geom::OrientedBox> centered_plank_family(double delta);

}  // namespace vinlab::incidence
