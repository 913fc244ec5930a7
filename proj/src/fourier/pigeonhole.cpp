#include "vinlab/fourier/pigeonhole.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "vinlab/harness/rng.hpp"

namespace vinlab::fourier {

namespace {

double dyadic_floor(double v) { return std::pow(2.0, std::floor(std::log2(v))); }
long dyadic_floor_l(long v) { return 1L << static_cast<long>(std::floor(std::log2(static_cast<double>(v)))); }

/// Dominant dyadic height class: maximal total count, ties to the larger class.
double dominant_height_class(const std::vector<Packet>& packets) {
    double hmax = 0.0;
    for (const auto& p : packets) hmax = std::max(hmax, std::abs(p.coeff));
    if (!(hmax > 0.0)) throw std::domain_error("pigeonhole_analysis: empty ensemble");
    std::map<double, long, std::greater<double>> classes;
    for (const auto& p : packets) {
        const double h = std::abs(p.coeff);
        if (h < 1e-12 * hmax) continue;  // discarded height classes
        ++classes[dyadic_floor(h)];
    }
    double best = 0.0;
    long best_count = -1;
    for (const auto& [cls, count] : classes) {
        if (count > best_count) {
            best_count = count;
            best = cls;
        }
    }
    return best;
}

bool in_class(double h, double cls) { return h >= cls && h < 2.0 * cls; }

}  // namespace

AnalysisResult pigeonhole_analysis(PacketEnsemble& ensemble) {
    const PacketLattice lat(ensemble.R);
    AnalysisResult res;

    // ------------------------------------------------------------------ first
    if (!ensemble.plates.empty()) {
        FirstSequenceParams& fp = res.first;
        fp.w = dominant_height_class(ensemble.plates);

        // Exact per-(J, Pi) counts within the height class.
        std::map<std::pair<long, long>, long> jp_counts;
        for (const auto& p : ensemble.plates) {
            if (!in_class(std::abs(p.coeff), fp.w)) continue;
            ++jp_counts[{p.interval, lat.pi_of_plate_slot(p.slot_t)}];
        }

        // Per-J dominant (n-class, X) pair.
        struct JPair {
            long n = 0;
            long X = 0;
        };
        std::map<long, JPair> j_pairs;
        {
            std::map<long, std::map<long, long>> per_j;  // j -> n-class -> #Pi
            for (const auto& [key, cnt] : jp_counts) {
                ++per_j[key.first][dyadic_floor_l(cnt)];
            }
            for (const auto& [j, classes] : per_j) {
                JPair best;
                double best_mass = -1.0;
                for (const auto& [ncls, npis] : classes) {
                    const double mass = static_cast<double>(ncls) * static_cast<double>(npis);
                    if (mass > best_mass ||
                        (mass == best_mass && ncls > best.n)) {
                        best_mass = mass;
                        best = {ncls, npis};
                    }
                }
                j_pairs[j] = best;
            }
        }

        // Dominant (n, X-class) group over J.
        std::map<std::pair<long, long>, double> group_mass;
        for (const auto& [j, pr] : j_pairs) {
            group_mass[{pr.n, dyadic_floor_l(pr.X)}] +=
                static_cast<double>(pr.n) * static_cast<double>(pr.X);
        }
        std::pair<long, long> heavy_group{0, 0};
        double best_mass = -1.0;
        for (const auto& [g, mass] : group_mass) {
            if (mass > best_mass) {
                best_mass = mass;
                heavy_group = g;
            }
        }
        fp.n = heavy_group.first;

        std::set<long> heavy_j;
        long x_max = 0;
        for (const auto& [j, pr] : j_pairs) {
            if (pr.n == heavy_group.first && dyadic_floor_l(pr.X) == heavy_group.second) {
                heavy_j.insert(j);
                x_max = std::max(x_max, pr.X);
            }
        }
        fp.X = x_max;

        // Heavy I's by dominant heavy-J count class.
        std::map<long, long> mi;  // i -> #heavy J
        for (long j : heavy_j) ++mi[lat.i_of_j(j)];
        std::map<long, double> m_mass;
        for (const auto& [i, cnt] : mi) {
            (void)i;
            m_mass[dyadic_floor_l(cnt)] += static_cast<double>(cnt);
        }
        long m_class = 0;
        best_mass = -1.0;
        for (const auto& [cls, mass] : m_mass) {
            if (mass > best_mass) {
                best_mass = mass;
                m_class = cls;
            }
        }
        std::set<long> kept_i;
        long m_max = 0;
        for (const auto& [i, cnt] : mi) {
            if (dyadic_floor_l(cnt) == m_class) {
                kept_i.insert(i);
                m_max = std::max(m_max, cnt);
            }
        }
        fp.m = m_max;

        // Contributing (J, Pi) pairs: heavy J of a kept I whose count sits in
        // the class n.  Heavy Pi by dominant contributing-count class.
        std::map<std::pair<long, long>, long> l_pi;  // (i, pi) -> #contributing J
        for (const auto& [key, cnt] : jp_counts) {
            const long j = key.first;
            if (!heavy_j.count(j)) continue;
            const long i = lat.i_of_j(j);
            if (!kept_i.count(i)) continue;
            if (dyadic_floor_l(cnt) != fp.n) continue;
            ++l_pi[{i, key.second}];
        }
        std::map<long, double> l_mass;
        for (const auto& [key, cnt] : l_pi) {
            (void)key;
            l_mass[dyadic_floor_l(cnt)] += static_cast<double>(cnt);
        }
        long l_class = 0;
        best_mass = -1.0;
        for (const auto& [cls, mass] : l_mass) {
            if (mass > best_mass) {
                best_mass = mass;
                l_class = cls;
            }
        }
        std::set<std::pair<long, long>> heavy_pi;
        long l_min = 0;
        for (const auto& [key, cnt] : l_pi) {
            if (dyadic_floor_l(cnt) == l_class) {
                heavy_pi.insert(key);
                l_min = l_min == 0 ? cnt : std::min(l_min, cnt);
            }
        }
        fp.l = l_min;

        // Final I filter by heavy-Pi count class Y.
        std::map<long, long> yi;
        for (const auto& [i, pi] : heavy_pi) {
            (void)pi;
            ++yi[i];
        }
        std::map<long, double> y_mass;
        for (const auto& [i, cnt] : yi) {
            (void)i;
            y_mass[dyadic_floor_l(cnt)] += static_cast<double>(cnt);
        }
        long y_class = 0;
        best_mass = -1.0;
        for (const auto& [cls, mass] : y_mass) {
            if (mass > best_mass) {
                best_mass = mass;
                y_class = cls;
            }
        }
        long y_min = 0;
        for (const auto& [i, cnt] : yi) {
            (void)i;
            if (dyadic_floor_l(cnt) == y_class) y_min = y_min == 0 ? cnt : std::min(y_min, cnt);
        }
        fp.Y = y_min;

        if (fp.l * fp.Y > fp.m * fp.X) {
            throw std::logic_error("pigeonhole_analysis: l Y <= m X violated");
        }
        fp.valid = fp.n > 0 && fp.X > 0 && fp.m > 0 && fp.l > 0 && fp.Y > 0;
    }

    // ----------------------------------------------------------------- second
    if (!ensemble.planks.empty()) {
        SecondSequenceParams& sp = res.second;
        sp.A = dominant_height_class(ensemble.planks);

        std::map<std::tuple<long, long, long>, long> tau_counts;  // (i, gt, b)
        for (const auto& p : ensemble.planks) {
            if (!in_class(std::abs(p.coeff), sp.A)) continue;
            ++tau_counts[{p.interval, lat.tau_of_plank_slot(p.slot_t), p.slot_n}];
        }
        std::map<long, double> n_mass;
        for (const auto& [key, cnt] : tau_counts) {
            (void)key;
            n_mass[dyadic_floor_l(cnt)] += static_cast<double>(cnt);
        }
        long n_class = 0;
        double best_mass = -1.0;
        for (const auto& [cls, mass] : n_mass) {
            if (mass > best_mass) {
                best_mass = mass;
                n_class = cls;
            }
        }
        std::set<std::tuple<long, long, long>> heavy_tau;
        long n_min = 0;
        for (const auto& [key, cnt] : tau_counts) {
            if (dyadic_floor_l(cnt) == n_class) {
                heavy_tau.insert(key);
                n_min = n_min == 0 ? cnt : std::min(n_min, cnt);
            }
        }
        sp.N = n_min;

        std::map<std::tuple<long, long, long>, long> sigma_counts;  // (i, gt, gn)
        for (const auto& [key, cnt] : tau_counts) {
            (void)cnt;
            if (!heavy_tau.count(key)) continue;
            ++sigma_counts[{std::get<0>(key), std::get<1>(key),
                            lat.sigma_of_n_slot(std::get<2>(key))}];
        }
        std::map<long, double> z1_mass;
        for (const auto& [key, cnt] : sigma_counts) {
            (void)key;
            z1_mass[dyadic_floor_l(cnt)] += static_cast<double>(cnt);
        }
        long z1_class = 0;
        best_mass = -1.0;
        for (const auto& [cls, mass] : z1_mass) {
            if (mass > best_mass) {
                best_mass = mass;
                z1_class = cls;
            }
        }
        std::set<std::tuple<long, long, long>> heavy_sigma;
        long z1_min = 0;
        for (const auto& [key, cnt] : sigma_counts) {
            if (dyadic_floor_l(cnt) == z1_class) {
                heavy_sigma.insert(key);
                z1_min = z1_min == 0 ? cnt : std::min(z1_min, cnt);
            }
        }
        sp.Z1 = z1_min;

        std::map<std::pair<long, long>, long> pi_counts;  // (i, pi) -> #heavy Sigma
        for (const auto& key : heavy_sigma) {
            const long gt = std::get<1>(key);
            ++pi_counts[{std::get<0>(key), gt / lat.r16}];
        }
        std::map<long, double> z2_mass;
        for (const auto& [key, cnt] : pi_counts) {
            (void)key;
            z2_mass[dyadic_floor_l(cnt)] += static_cast<double>(cnt);
        }
        long z2_class = 0;
        best_mass = -1.0;
        for (const auto& [cls, mass] : z2_mass) {
            if (mass > best_mass) {
                best_mass = mass;
                z2_class = cls;
            }
        }
        long z2_min = 0;
        for (const auto& [key, cnt] : pi_counts) {
            (void)key;
            if (dyadic_floor_l(cnt) == z2_class) z2_min = z2_min == 0 ? cnt : std::min(z2_min, cnt);
        }
        sp.Z2 = z2_min;
        sp.valid = sp.N > 0 && sp.Z1 > 0 && sp.Z2 > 0;
    }

    // Capacity ranges of the lattice.
    if (res.first.valid) {
        if (res.first.n > lat.r16 || res.first.X > lat.r13 || res.first.m > lat.r16 ||
            res.first.l > res.first.m || res.first.Y > lat.r13) {
            throw std::logic_error("pigeonhole_analysis: first-sequence parameter out of range");
        }
    }
    if (res.second.valid) {
        if (res.second.N > lat.r16 || res.second.Z1 > lat.r16 || res.second.Z2 > lat.r13) {
            throw std::logic_error("pigeonhole_analysis: second-sequence parameter out of range");
        }
    }

    ensemble.first = res.first;
    ensemble.second = res.second;
    return res;
}

Prop84Report prop84_check(const PacketEnsemble& ensemble, long samples_per_plank,
                          std::uint64_t seed) {
    if (!ensemble.first.valid || !ensemble.second.valid) {
        throw std::domain_error("prop84_check: both pigeonholing sequences must be populated");
    }
    const double R = ensemble.R;
    const FirstSequenceParams& f = ensemble.first;
    const SecondSequenceParams& s = ensemble.second;

    Prop84Report rep;
    rep.A_planted = s.A;
    rep.bound_l2 = f.w * std::sqrt(static_cast<double>(f.l)) * std::pow(R, 1.0 / 12.0) /
                   std::sqrt(static_cast<double>(s.N));
    rep.bound_l4 = f.w * std::pow(static_cast<double>(f.l), 0.25) * std::pow(R, 1.0 / 8.0) /
                   std::pow(static_cast<double>(s.N * s.Z1), 0.25);
    rep.bound_l6 = f.w * std::sqrt(static_cast<double>(f.l)) *
                   std::pow(static_cast<double>(f.n), 1.0 / 6.0) * std::pow(R, 1.0 / 12.0) /
                   std::pow(static_cast<double>(s.N * s.Z1 * s.Z2), 1.0 / 6.0);

    const PacketField g = synthesize_from_packets(ensemble, PacketSubset::Plates);

    std::vector<double> heights;
    harness::Rng root(seed);
    for (std::size_t k = 0; k < ensemble.planks.size(); ++k) {
        harness::Rng rng = root.stream(static_cast<std::uint64_t>(k));
        const auto& box = ensemble.planks[k].box;
        double acc = 0.0;
        for (long t = 0; t < samples_per_plank; ++t) {
            const geom::Vec3 u{0.5 * rng.next_symmetric(), 0.5 * rng.next_symmetric(),
                               0.5 * rng.next_symmetric()};
            acc += std::norm(g(box.center() + box.edges() * u));
        }
        heights.push_back(std::sqrt(acc / static_cast<double>(samples_per_plank)));
    }
    std::sort(heights.begin(), heights.end());
    rep.A_measured = heights[heights.size() / 2];

    const double bmin = std::min({rep.bound_l2, rep.bound_l4, rep.bound_l6});
    rep.binding_branch = bmin == rep.bound_l2 ? 2 : (bmin == rep.bound_l4 ? 4 : 6);
    rep.ratio = rep.A_measured / bmin;
    rep.ratio_planted = rep.A_planted / bmin;
    return rep;
}

}  // namespace vinlab::fourier
