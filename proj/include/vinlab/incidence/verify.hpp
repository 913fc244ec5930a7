#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vinlab/incidence/family.hpp"
#include "vinlab/incidence/rich_cubes.hpp"

namespace vinlab::incidence {

struct IncidenceRow {
    std::string check;
    int trial = 0;
    double r = 0.0;
    long count = 0;     // |Q_r|
    double bound = 0.0; // theorem right-hand side
    double ratio = 0.0; // count / bound
};

struct SigmaDiagnostic {
    int trial = 0;
    double r = 0.0;
    double sigma = 0.0;
    long m = 0;
    double worst_slack = 0.0;  // max of the three observed/bound quotients
};

struct IncidenceReport {
    std::string family;
    double scale = 0.0;  // R or delta
    Caps caps;
    int trials = 0;
    std::uint64_t seed = 0;
    long family_size = 0;  // of the last trial
    std::vector<IncidenceRow> rows;
    std::vector<SigmaDiagnostic> sigma_rows;
    double max_ratio = 0.0;
    double crossover_r = 0.0;  // plates: where the quartic bound overtakes the quadratic
};

/// Well-spaced tube incidences: counts r-rich R^{2/3}-cubes against the
/// quadratic laws |T| N R^{1/3} / r^2 (per-plate cap), |T| N1 R^{1/3} / r^2
/// (per-box cap, applied above the threshold r >= c0 * N1 * R^{1/6}), and the
/// bilinear baseline |T|^2 / r^2.  Also reports, per trial and r, the dyadic
/// bundle scale sigma and occupancy class minimizing the joint slack of the
/// three structural inequalities behind the counting argument.
IncidenceReport verify_tube_incidence(double R, Caps caps, const std::vector<double>& r_grid,
                                      int trials, double density, GenMode mode,
                                      std::uint64_t seed, double threshold_c0 = 1.0);

/// Plate incidences at cube side delta^{-1}: quadratic law |S| N d^{-2} / r^2
/// and quartic law |S| N^2 d^{-3} / r^4.
IncidenceReport verify_plate_kakeya(double delta, long N, const std::vector<double>& r_grid,
                                    int trials, double density, GenMode mode, std::uint64_t seed);

/// Spaced-plank incidences at cube side R^{1/3}: law |P| N^5 Z1 R^2 / r^7.
IncidenceReport verify_plank_incidence(double R, long N, long Z1,
                                       const std::vector<double>& r_grid, int trials,
                                       double density, std::uint64_t seed);

struct UnionLemmaRow {
    std::string check;
    double sigma = 0.0;
    double anchor = 0.0;       // left endpoint of the bundle interval J
    double worst_slack = 0.0;  // smallest dilation of the stated box containing everything
    double volume_ratio = 0.0; // intersection volume / stated-box volume (when applicable)
};

struct UnionLemmaReport {
    double R = 0.0;
    std::vector<UnionLemmaRow> rows;
    double worst_slack = 0.0;
};

/// Vertex-containment and intersection-volume checks for origin-centered
/// bundles: tubes against the two-branch union box, planks against the
/// (R sigma^2, R sigma, R) box and the (R^{1/3}, R^{1/3}/sigma, R^{1/3}/sigma^2)
/// intersection, plates against the fat-plate union and their half-scale
/// intersection.
UnionLemmaReport verify_union_lemmas(double R, const std::vector<double>& sigmas);

}  // namespace vinlab::incidence
