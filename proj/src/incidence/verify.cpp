#include "vinlab/incidence/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "vinlab/geom/polytope.hpp"
#include "vinlab/harness/rng.hpp"

namespace vinlab::incidence {

using geom::OrientedBox;
using geom::Vec3;

namespace {

double dilation_needed(const OrientedBox& container, const Vec3& point) {
    return 2.0 * norm_inf(container.to_box_coords(point));
}

double vertex_slack(const OrientedBox& container, const OrientedBox& content) {
    double worst = 0.0;
    for (const auto& v : content.vertices()) {
        worst = std::max(worst, dilation_needed(container, v));
    }
    return worst;
}

/// Exact R^{-1/3} for R a power of 8; std::pow alone drifts off the dyadic grid.
double exact_inv_cbrt(double R) {
    const double root = std::round(std::cbrt(R));
    return 1.0 / root;
}

/// Dyadic sigma values R^{-1/3} <= sigma <= 1.
std::vector<double> dyadic_sigmas(double R) {
    std::vector<double> out;
    for (double s = exact_inv_cbrt(R); s <= 1.0; s *= 2.0) out.push_back(s);
    return out;
}

}  // namespace

IncidenceReport verify_tube_incidence(double R, Caps caps, const std::vector<double>& r_grid,
                                      int trials, double density, GenMode mode,
                                      std::uint64_t seed, double threshold_c0) {
    IncidenceReport rep;
    rep.family = "tube";
    rep.scale = R;
    rep.caps = caps;
    rep.trials = trials;
    rep.seed = seed;

    const double r13 = std::pow(R, 1.0 / 3.0);
    const double r16 = std::pow(R, 1.0 / 6.0);
    const double cube_side = std::pow(R, 2.0 / 3.0);

    for (int trial = 0; trial < trials; ++trial) {
        const BoxFamily fam = generate_family(FamilyKind::Tube, R, caps, density, mode,
                                              harness::Rng::mix(seed) + static_cast<std::uint64_t>(trial));
        rep.family_size = static_cast<long>(fam.size());
        const double T = static_cast<double>(fam.size());
        const RichCubeQuery q = count_rich_cubes(fam, cube_side);

        for (double r : r_grid) {
            const long count = q.rich_count(std::lround(r));
            const double n_bound = T * static_cast<double>(caps.N) * r13 / (r * r);
            rep.rows.push_back({"tube-wellspaced", trial, r, count, n_bound,
                                n_bound > 0 ? count / n_bound : 0.0});
            const double bi_bound = T * T / (r * r);
            rep.rows.push_back({"tube-bilinear", trial, r, count, bi_bound,
                                bi_bound > 0 ? count / bi_bound : 0.0});
            if (r >= threshold_c0 * static_cast<double>(caps.N1) * r16) {
                const double n1_bound = T * static_cast<double>(caps.N1) * r13 / (r * r);
                rep.rows.push_back({"tube-boxspaced", trial, r, count, n1_bound,
                                    n1_bound > 0 ? count / n1_bound : 0.0});
            }
        }

        // Diagnostic: the dyadic bundle scale and box-occupancy class that come
        // closest to certifying the observed counts through the three
        // structural inequalities of the counting argument.
        for (double r : r_grid) {
            const long count = q.rich_count(std::lround(r));
            SigmaDiagnostic best;
            best.trial = trial;
            best.r = r;
            best.worst_slack = std::numeric_limits<double>::infinity();
            for (double sigma : dyadic_sigmas(R)) {
                const bool small_angle = sigma >= std::pow(R, -1.0 / 6.0);
                const double jlen = std::pow(R, -1.0 / 3.0) / sigma;
                // Count tubes per union box, tiled along the frame of each J.
                std::map<long, long> per_u;
                const Vec3 udims = small_angle
                                       ? Vec3{std::pow(R, 2.0 / 3.0),
                                              std::pow(R, 2.0 / 3.0) / sigma, R}
                                       : Vec3{r13 / (sigma * sigma),
                                              std::pow(R, 2.0 / 3.0) / sigma, R};
                for (const auto& fb : fam.boxes()) {
                    const double c = fb.dir * std::pow(R, -1.0 / 3.0);
                    const long jindex = static_cast<long>(std::floor(c / jlen + 1e-9));
                    const geom::Frame f = geom::frenet_frame(
                        std::min(1.0, static_cast<double>(jindex) * jlen));
                    const Vec3 pos = fb.box.center();
                    const long iu = static_cast<long>(std::floor(dot(pos, f.tangent) / (2.0 * udims.x)));
                    const long iv = static_cast<long>(std::floor(dot(pos, f.normal) / (2.0 * udims.y)));
                    const long key = ((jindex * 4096 + iu + 2048) * 4096) + iv + 2048;
                    ++per_u[key];
                }
                long m_max = 1;
                for (const auto& [k, v] : per_u) {
                    (void)k;
                    m_max = std::max(m_max, v);
                }
                const double m = std::pow(2.0, std::floor(std::log2(static_cast<double>(m_max))));
                const double q_bound = small_angle ? T * m * sigma * r13 / (r * r)
                                                   : T * m * sigma * sigma * sigma *
                                                         std::pow(R, 2.0 / 3.0) / (r * r);
                const double r_bound = small_angle ? r13 * m * sigma * sigma
                                                   : std::pow(R, 2.0 / 3.0) * m * std::pow(sigma, 4);
                const double m_bound =
                    small_angle
                        ? (1.0 / sigma) * std::min(static_cast<double>(caps.N1), 1.0 / sigma)
                        : std::pow(sigma, -3) * std::pow(R, -1.0 / 3.0) *
                              std::min(static_cast<double>(caps.N1) / (sigma * r16),
                                       static_cast<double>(caps.N));
                const double slack = std::max({count / std::max(q_bound, 1e-300),
                                               r / std::max(r_bound, 1e-300),
                                               m / std::max(m_bound, 1e-300)});
                if (slack < best.worst_slack) {
                    best.worst_slack = slack;
                    best.sigma = sigma;
                    best.m = std::lround(m);
                }
            }
            rep.sigma_rows.push_back(best);
        }
    }

    for (const auto& row : rep.rows) {
        if (row.check != "tube-bilinear") rep.max_ratio = std::max(rep.max_ratio, row.ratio);
    }
    return rep;
}

IncidenceReport verify_plate_kakeya(double delta, long N, const std::vector<double>& r_grid,
                                    int trials, double density, GenMode mode,
                                    std::uint64_t seed) {
    IncidenceReport rep;
    rep.family = "plate";
    rep.scale = delta;
    rep.caps.N = N;
    rep.trials = trials;
    rep.seed = seed;

    const double dinv = 1.0 / delta;
    rep.crossover_r = std::sqrt(static_cast<double>(N) * dinv);

    for (int trial = 0; trial < trials; ++trial) {
        Caps caps;
        caps.N = N;
        const BoxFamily fam = generate_family(FamilyKind::Plate, delta, caps, density, mode,
                                              harness::Rng::mix(seed) + static_cast<std::uint64_t>(trial));
        rep.family_size = static_cast<long>(fam.size());
        const double S = static_cast<double>(fam.size());
        const RichCubeQuery q = count_rich_cubes(fam, dinv);

        for (double r : r_grid) {
            const long count = q.rich_count(std::lround(r));
            const double l2 = S * static_cast<double>(N) * dinv * dinv / (r * r);
            const double l4 = S * static_cast<double>(N * N) * dinv * dinv * dinv /
                              (r * r * r * r);
            rep.rows.push_back({"plate-l2", trial, r, count, l2, count / l2});
            rep.rows.push_back({"plate-l4", trial, r, count, l4, count / l4});
        }
    }
    for (const auto& row : rep.rows) rep.max_ratio = std::max(rep.max_ratio, row.ratio);
    return rep;
}

IncidenceReport verify_plank_incidence(double R, long N, long Z1,
                                       const std::vector<double>& r_grid, int trials,
                                       double density, std::uint64_t seed) {
    IncidenceReport rep;
    rep.family = "plank";
    rep.scale = R;
    rep.caps.N = N;
    rep.caps.Z1 = Z1;
    rep.trials = trials;
    rep.seed = seed;

    const double cube_side = std::pow(R, 1.0 / 3.0);

    for (int trial = 0; trial < trials; ++trial) {
        Caps caps;
        caps.N = N;
        caps.Z1 = Z1;
        const BoxFamily fam = generate_family(FamilyKind::PlankSp, R, caps, density,
                                              GenMode::Uniform,
                                              harness::Rng::mix(seed) + static_cast<std::uint64_t>(trial));
        rep.family_size = static_cast<long>(fam.size());
        const double P = static_cast<double>(fam.size());
        const RichCubeQuery q = count_rich_cubes(fam, cube_side);

        for (double r : r_grid) {
            const long count = q.rich_count(std::lround(r));
            const double bound = P * std::pow(static_cast<double>(N), 5) *
                                 static_cast<double>(Z1) * R * R / std::pow(r, 7);
            rep.rows.push_back({"plank-spaced", trial, r, count, bound, count / bound});
        }
    }
    for (const auto& row : rep.rows) rep.max_ratio = std::max(rep.max_ratio, row.ratio);
    return rep;
}

UnionLemmaReport verify_union_lemmas(double R, const std::vector<double>& sigmas) {
    UnionLemmaReport rep;
    rep.R = R;
    const double r13inv = exact_inv_cbrt(R);
    const double r13 = 1.0 / r13inv;
    const double r23 = r13 * r13;

    for (double sigma : sigmas) {
        // Tube bundles over J of length R^{-1/3} / sigma.
        {
            const double jlen = std::min(1.0, r13inv / sigma);
            const bool small_angle = sigma >= std::pow(R, -1.0 / 6.0);
            for (double a : {0.0, std::max(0.0, 0.5 * (1.0 - jlen)),
                             std::max(0.0, 1.0 - jlen)}) {
                const Vec3 dims = small_angle ? Vec3{r23, r23 / sigma, R}
                                              : Vec3{r13 / (sigma * sigma), r23 / sigma, R};
                const OrientedBox u = geom::frenet_box(a, dims, {0, 0, 0}, geom::Role::BoxU);
                double worst = 0.0;
                for (double c = a; c < a + jlen - 0.5 * r13inv; c += r13inv) {
                    worst = std::max(worst, vertex_slack(u, geom::tube(R, c)));
                }
                rep.rows.push_back({small_angle ? "tube-union-small-angle"
                                                : "tube-union-large-angle",
                                    sigma, a, worst, 0.0});
            }
        }

        // Plank bundles over J of length sigma.
        {
            const double jlen = std::min(1.0, sigma);
            for (double a : {0.0, std::max(0.0, 1.0 - jlen)}) {
                std::vector<OrientedBox> planks;
                for (double c = a; c < a + jlen - 0.5 * r13inv; c += r13inv) {
                    planks.push_back(geom::spatial_plank(R, c));
                }
                if (planks.empty()) continue;

                const OrientedBox u = geom::frenet_box(
                    a, {R * sigma * sigma, R * sigma, R}, {0, 0, 0}, geom::Role::BoxU);
                double worst = 0.0;
                for (const auto& p : planks) worst = std::max(worst, vertex_slack(u, p));
                rep.rows.push_back({"plank-union", sigma, a, worst, 0.0});

                const double expect =
                    8.0 * r13 * (r13 / sigma) * (r13 / (sigma * sigma));
                const double vol = geom::intersect_boxes(planks).volume();
                rep.rows.push_back({"plank-intersection", sigma, a, 0.0, vol / expect});
            }
        }

        // Plate bundles at delta = R^{-1/3} over J of length sigma.
        {
            const double delta = r13inv;
            if (sigma >= delta * (1 - 1e-12)) {
                const double jlen = sigma;
                const double a = 0.0;
                std::vector<OrientedBox> plates;
                for (double c = a; c < a + jlen - 0.5 * delta; c += delta) {
                    plates.push_back(geom::plate(delta, c));
                }
                if (!plates.empty()) {
                    const double d2 = 1.0 / (delta * delta);
                    const OrientedBox fat = geom::frenet_box(a, {d2 * sigma, d2, d2}, {0, 0, 0},
                                                             geom::Role::FatPlate);
                    double worst = 0.0;
                    for (const auto& s : plates) worst = std::max(worst, vertex_slack(fat, s));
                    rep.rows.push_back({"plate-union", sigma, a, worst, 0.0});
                }
            }
        }
    }

    // Plate intersection at the half scale J of length delta^{1/2}.
    {
        const double delta = r13inv;
        const double jhalf = std::sqrt(delta);
        std::vector<OrientedBox> plates;
        for (double c = 0.0; c < jhalf - 0.5 * delta; c += delta) {
            plates.push_back(geom::plate(delta, c));
        }
        if (plates.size() >= 2) {
            const double expect = 8.0 * (1.0 / delta) * std::pow(delta, -1.5) *
                                  std::pow(delta, -2.0);
            const double vol = geom::intersect_boxes(plates).volume();
            rep.rows.push_back({"plate-intersection", jhalf, 0.0, 0.0, vol / expect});
        }
    }

    for (const auto& row : rep.rows) rep.worst_slack = std::max(rep.worst_slack, row.worst_slack);
    return rep;
}

}  // namespace vinlab::incidence
