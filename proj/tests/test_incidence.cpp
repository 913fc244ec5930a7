#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "vinlab/harness/rng.hpp"
#include "vinlab/incidence/l4.hpp"
#include "vinlab/incidence/overlap.hpp"
#include "vinlab/incidence/verify.hpp"

using namespace vinlab;
using namespace vinlab::incidence;
using geom::OrientedBox;
using geom::Vec3;
using vinlab::harness::Rng;

TEST_CASE("separating-axis overlap test on simple configurations") {
    const OrientedBox a = OrientedBox::cube({0, 0, 0}, 2.0);
    CHECK(boxes_intersect(a, OrientedBox::cube({1.5, 0, 0}, 2.0)));
    CHECK(!boxes_intersect(a, OrientedBox::cube({2.5, 0, 0}, 2.0)));
    // Touching faces count as intersecting.
    CHECK(boxes_intersect(a, OrientedBox::cube({2.0, 0, 0}, 2.0)));

    // Thin rotated plank clipping a cube corner.
    const OrientedBox plank = geom::spatial_plank_delta(0.25, 0.5, {1.9, 1.9, 0});
    const OrientedBox c2 = OrientedBox::cube({0, 0, 0}, 4.0);
    CHECK(boxes_intersect(plank, c2));
}

TEST_CASE("bush family: one tube per direction through the origin") {
    Caps caps;
    caps.N = 1;
    caps.N1 = 1;
    const BoxFamily fam = generate_family(FamilyKind::Tube, 64.0, caps, 0.0, GenMode::Bush, 3);
    CHECK(fam.size() == 4);  // R^{1/3} directions
    fam.check_caps();
    for (const auto& fb : fam.boxes()) {
        CHECK(fb.box.contains({0, 0, 0}, 1.0, 1e-9));
    }
}

TEST_CASE("uniform family size tracks the density target") {
    Caps caps;  // uncapped
    const double R = 4096.0;
    const double density = 0.25;
    const BoxFamily fam = generate_family(FamilyKind::Tube, R, caps, density, GenMode::Uniform, 7);
    const auto& s = fam.scheme();
    // With no caps the admissible slots are all slots.
    const double expected = density * static_cast<double>(s.slots_per_dir() * s.directions);
    CHECK(std::abs(static_cast<double>(fam.size()) - expected) <= 0.1 * expected);
}

TEST_CASE("infeasible density names the binding cap") {
    Caps caps;
    caps.N = 1;  // one tube per plate: at most slots_t per direction
    caps.N1 = 1;
    try {
        generate_family(FamilyKind::Tube, 64.0, caps, 1.5, GenMode::Uniform, 3);
        CHECK(false);
    } catch (const InfeasibleFamily& e) {
        CHECK((e.binding_cap == "N" || e.binding_cap == "N1"));
    }

    Caps pcaps;
    pcaps.N = 2;
    try {
        generate_family(FamilyKind::Plate, 0.125, pcaps, 2.0, GenMode::Uniform, 3);
        CHECK(false);
    } catch (const InfeasibleFamily& e) {
        CHECK(e.binding_cap == "N");
    }
}

TEST_CASE("structured plank families satisfy the two-level spacing exactly") {
    Caps caps;
    caps.N = 2;
    caps.Z1 = 2;
    const BoxFamily fam = generate_family(FamilyKind::PlankSp, 4096.0, caps, 0.05,
                                          GenMode::Uniform, 11);
    fam.check_caps();  // throws if any tau is not exactly N or Sigma not exactly Z1
    CHECK(fam.size() % (caps.N * caps.Z1) == 0);
    CHECK(fam.size() > 0);

    Caps bad;
    bad.N = 8;  // exceeds the R^{1/6} = 4 sub-slots of a tau
    bad.Z1 = 2;
    CHECK_THROWS_AS(generate_family(FamilyKind::PlankSp, 4096.0, bad, 0.05, GenMode::Uniform, 1),
                    InfeasibleFamily);
}

TEST_CASE("rich cube counts: empty, single and bush families") {
    const double R = 64.0;
    const double side = std::pow(R, 2.0 / 3.0);

    const RichCubeQuery empty = count_rich_cubes(std::vector<OrientedBox>{}, R, side);
    CHECK(empty.rich_count(1) == 0);

    // A single tube: octree count equals the brute-force scan.
    const OrientedBox t = geom::tube(R, 0.25, {10.0, -20.0, 5.0});
    const RichCubeQuery single = count_rich_cubes({t}, R, side);
    const auto brute = brute_force_counts({t}, single.grid);
    long brute_cells = 0;
    for (int c : brute) brute_cells += (c > 0);
    CHECK(single.rich_count(1) == brute_cells);
    CHECK(single.rich_count(2) == 0);

    // Bush of transverse tubes through the center cube.
    Caps caps;
    caps.N = 1;
    caps.N1 = 1;
    const BoxFamily bush = generate_family(FamilyKind::Tube, R, caps, 0.0, GenMode::Bush, 3);
    const RichCubeQuery q = count_rich_cubes(bush, side);
    CHECK(q.rich_count(static_cast<long>(bush.size())) >= 1);

    // Monotone in r.
    for (long r = 1; r <= q.max_count(); ++r) {
        CHECK(q.rich_count(r) >= q.rich_count(r + 1));
    }
}

TEST_CASE("octree counting equals the brute-force oracle on random families") {
    const double R = 64.0;
    const double side = std::pow(R, 2.0 / 3.0);
    Rng rng(17);
    for (int f = 0; f < 10; ++f) {
        Caps caps;
        caps.N = 1 + static_cast<long>(rng.next_below(3));
        caps.N1 = caps.N;
        const BoxFamily fam = generate_family(FamilyKind::Tube, R, caps,
                                              0.05 + 0.3 * rng.next_double(), GenMode::Uniform,
                                              rng.next_u64());
        const RichCubeQuery fast = count_rich_cubes(fam, side);
        const auto brute = brute_force_counts(fam.plain_boxes(), fast.grid);
        std::vector<int> dense(brute.size(), 0);
        for (const auto& [key, c] : fast.counts) dense[static_cast<std::size_t>(key)] = c;
        CHECK(dense == brute);
    }
}

TEST_CASE("counting is covariant under the measure-preserving shear") {
    const double R = 64.0;
    Caps caps;
    caps.N = 2;
    caps.N1 = 2;
    const BoxFamily fam = generate_family(FamilyKind::Tube, R, caps, 0.2, GenMode::Uniform, 23);
    const auto grid = CubeGrid::make(R, std::pow(R, 2.0 / 3.0));
    const auto base = brute_force_counts(fam.plain_boxes(), grid);

    const geom::Mat3 A = geom::shear_map(1.0, 0.37).inv_transpose;
    std::vector<OrientedBox> mapped;
    for (const auto& b : fam.plain_boxes()) mapped.push_back(b.linear_image(A));
    const auto moved = brute_force_counts(mapped, grid, A);
    CHECK(base == moved);
}

TEST_CASE("rich counts are invariant under translations of family and grid") {
    const double R = 64.0;
    const double side = std::pow(R, 2.0 / 3.0);
    Caps caps;
    caps.N = 2;
    caps.N1 = 2;
    const BoxFamily fam = generate_family(FamilyKind::Tube, R, caps, 0.2, GenMode::Uniform, 29);
    const RichCubeQuery q0 = count_rich_cubes(fam.plain_boxes(), R, side);

    // Shift family and grid rigidly by the same diagonal offset.
    const double off = side * 0.37;
    std::vector<OrientedBox> shifted;
    for (const auto& b : fam.plain_boxes()) shifted.push_back(b.translated({off, off, off}));
    const RichCubeQuery q1 = count_rich_cubes(
        shifted, CubeGrid::make_at(-R + off, side, q0.grid.cells));
    CHECK(q0.histogram == q1.histogram);
}

TEST_CASE("quadruple sum of a single plank is its volume") {
    const auto planks = std::vector<OrientedBox>{geom::spatial_plank_delta(0.25, 0.5)};
    const L4Result res = l4_sum_exact(planks);
    CHECK(res.l4 == doctest::Approx(planks[0].volume()).epsilon(1e-9));
    CHECK(res.l1 == doctest::Approx(planks[0].volume()).epsilon(1e-12));
}

TEST_CASE("exact and Monte Carlo quadruple sums agree within three sigmas") {
    const double delta = 0.125;
    const auto planks = centered_plank_family(delta);
    const L4Result exact = l4_sum_exact(planks);
    const L4Result mc = l4_sum_monte_carlo(planks, 400000, 5);
    CHECK(exact.l1 == doctest::Approx(mc.l1).epsilon(1e-12));
    CHECK(std::abs(mc.l4 - exact.l4) <= 3.0 * mc.stderr_ + 1e-9 * exact.l4);
}

TEST_CASE("exact quadruple sum refuses oversized families") {
    std::vector<OrientedBox> many;
    for (int k = 0; k < 40; ++k) {
        many.push_back(geom::spatial_plank_delta(1.0 / 64.0, k / 64.0));
    }
    CHECK_THROWS_AS(l4_sum_exact(many, 32), UseMonteCarlo);
}

TEST_CASE("centered plank family obeys the log-square quartic law") {
    const double delta = 1.0 / 16.0;
    const auto planks = centered_plank_family(delta);
    const L4Result res = l4_sum_exact(planks);
    const double logd = std::log(1.0 / delta);
    // Record the constant; it must be O(1) at desk scale.
    const double c0 = res.ratio() / (logd * logd);
    CHECK(c0 > 0.0);
    CHECK(c0 < 64.0);
}

TEST_CASE("union lemma slacks and intersection bands") {
    const double R = 4096.0;
    std::vector<double> sigmas;
    for (double s = std::pow(R, -1.0 / 3.0); s <= 1.0 + 1e-12; s *= 2.0) sigmas.push_back(s);
    const UnionLemmaReport rep = verify_union_lemmas(R, sigmas);
    CHECK(!rep.rows.empty());
    CHECK(rep.worst_slack <= 10.0);
    bool saw_plank_intersection = false;
    for (const auto& row : rep.rows) {
        if (row.volume_ratio > 0.0) {
            CHECK(row.volume_ratio >= 1.0 / 64.0);
            CHECK(row.volume_ratio <= 64.0);
            if (row.check == "plank-intersection") saw_plank_intersection = true;
        }
    }
    CHECK(saw_plank_intersection);
}

TEST_CASE("tube incidence ratios stay under the polylog envelope at desk scale") {
    Caps caps;
    caps.N = 2;
    caps.N1 = 2;
    const std::vector<double> r_grid{1, 2, 4};
    const auto rep = verify_tube_incidence(64.0, caps, r_grid, 3, 0.2, GenMode::Uniform, 31);
    CHECK(!rep.rows.empty());
    CHECK(rep.max_ratio <= std::pow(std::log(64.0), 6.0));
    // The bilinear baseline is loose for linear families at small r; the
    // polylog envelope still holds.
    for (const auto& row : rep.rows) {
        if (row.check == "tube-bilinear") {
            CHECK(row.ratio <= std::pow(std::log(64.0), 6.0));
        }
    }
    CHECK(!rep.sigma_rows.empty());
}

TEST_CASE("plate incidence: quartic bound beats quadratic above the crossover") {
    const double delta = 0.125;
    const std::vector<double> r_grid{1, 2, 4, 8};
    const auto rep = verify_plate_kakeya(delta, 2, r_grid, 3, 0.5, GenMode::Uniform, 37);
    CHECK(rep.crossover_r == doctest::Approx(std::sqrt(2.0 * 8.0)));
    const double dinv = 1.0 / delta;
    for (double r : r_grid) {
        if (r >= 2.0 * rep.crossover_r) {
            const double l2 = 2.0 * dinv * dinv / (r * r);
            const double l4 = 4.0 * dinv * dinv * dinv / std::pow(r, 4);
            CHECK(l4 <= l2);
        }
    }
    CHECK(rep.max_ratio <= std::pow(std::log(dinv * dinv), 6.0));
}

TEST_CASE("plank incidence ratios are finite and monotone") {
    const std::vector<double> r_grid{1, 2, 4};
    const auto rep = verify_plank_incidence(64.0, 1, 1, r_grid, 2, 0.2, 41);
    CHECK(!rep.rows.empty());
    long prev = (1L << 60);
    for (const auto& row : rep.rows) {
        if (row.trial == 0) {
            CHECK(row.count <= prev);
            prev = row.count;
        }
        CHECK(std::isfinite(row.ratio));
    }
}
