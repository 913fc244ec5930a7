#pragma once

#include <cstdint>

#include "vinlab/fourier/packets.hpp"

namespace vinlab::fourier {

/// Two-stage dyadic classification of a packet ensemble.
///
/// First sequence (plates): height class w; per-(J, Pi) plate counts are
/// classified dyadically, each J keeps its dominant (n, X) pair, the J's of
/// the dominant pair class become heavy, I's keep the dominant heavy-J count
/// class m, fat plates keep the dominant contributing-count class l, and the
/// surviving I's keep the dominant heavy-Pi count class Y.
///
/// Second sequence (planks): height class A; per-tau plank counts give N,
/// heavy-tau counts per Sigma give Z1, heavy-Sigma counts per Pi give Z2.
///
/// Reported representatives are chosen so that l Y <= m X holds by counting:
/// l and Y are minima over the surviving heavy boxes, m and X maxima over the
/// surviving intervals, all within their dyadic class.  A uniformly planted
/// ensemble is reproduced exactly.
struct AnalysisResult {
    FirstSequenceParams first;
    SecondSequenceParams second;
};

AnalysisResult pigeonhole_analysis(PacketEnsemble& ensemble);

struct Prop84Report {
    double A_measured = 0.0;  // median local L^2 height of the plate field on the planks
    double A_planted = 0.0;   // analyzer height class of the plank packets
    double bound_l2 = 0.0;    // w l^{1/2} R^{1/12} / N^{1/2}
    double bound_l4 = 0.0;    // w l^{1/4} R^{1/8} / (N Z1)^{1/4}
    double bound_l6 = 0.0;    // w l^{1/2} n^{1/6} R^{1/12} / (N Z1 Z2)^{1/6}
    int binding_branch = 0;   // 2, 4 or 6
    double ratio = 0.0;       // A_measured / min(bounds)
    double ratio_planted = 0.0;
};

/// Measures the typical plank height of the synthesized plate field and
/// compares it with the three decoupling bounds tied to the pigeonholing
/// parameters.  Requires both sequences to be populated.
Prop84Report prop84_check(const PacketEnsemble& ensemble, long samples_per_plank,
                          std::uint64_t seed);

}  // namespace vinlab::fourier
