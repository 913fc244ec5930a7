#include "vinlab/fourier/packets.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "vinlab/harness/rng.hpp"

namespace vinlab::fourier {

using geom::OrientedBox;
using geom::Vec3;

PacketLattice::PacketLattice(double R_) : R(R_) {
    auto exact = [&](double e, const char* what) {
        const double v = std::pow(R, e);
        const long r = std::lround(v);
        if (std::abs(v - static_cast<double>(r)) > 1e-6) {
            throw std::domain_error(std::string("PacketLattice: ") + what +
                                    " requires R = 2^{6k}");
        }
        return r;
    };
    r16 = exact(1.0 / 6.0, "R^{1/6}");
    r13 = exact(1.0 / 3.0, "R^{1/3}");
    r12 = exact(1.0 / 2.0, "R^{1/2}");
    r23 = exact(2.0 / 3.0, "R^{2/3}");
}

Packet make_plate_packet(double R, long j, long slot, Complex coeff) {
    const PacketLattice lat(R);
    if (j < 0 || j >= lat.j_count()) throw std::domain_error("plate packet: bad interval index");
    if (slot < 0 || slot >= lat.r12) throw std::domain_error("plate packet: bad slot");
    const double jlen = 1.0 / static_cast<double>(lat.r12);
    const double c = (static_cast<double>(j) + 0.5) * jlen;
    const double half_t = std::sqrt(R);
    const geom::Frame f = geom::frenet_frame(c);
    const Vec3 center = f.tangent * (-R + (static_cast<double>(slot) + 0.5) * 2.0 * half_t);
    Packet p;
    p.box = geom::frenet_box(c, {half_t, R, R}, center, geom::Role::Plate,
                             geom::Interval{j * jlen, (j + 1) * jlen});
    p.coeff = coeff;
    p.carrier = c;
    p.interval = j;
    p.slot_t = slot;
    return p;
}

Packet make_plank_packet(double R, long i, long slot_t, long slot_n, Complex coeff) {
    const PacketLattice lat(R);
    if (i < 0 || i >= lat.i_count()) throw std::domain_error("plank packet: bad interval index");
    if (slot_t < 0 || slot_t >= lat.r23) throw std::domain_error("plank packet: bad t slot");
    if (slot_n < 0 || slot_n >= lat.r13) throw std::domain_error("plank packet: bad n slot");
    const double ilen = 1.0 / static_cast<double>(lat.r13);
    const double c = (static_cast<double>(i) + 0.5) * ilen;
    const double half_t = std::pow(R, 1.0 / 3.0);
    const double half_n = std::pow(R, 2.0 / 3.0);
    const geom::Frame f = geom::frenet_frame(c);
    const Vec3 center = f.tangent * (-R + (static_cast<double>(slot_t) + 0.5) * 2.0 * half_t) +
                        f.normal * (-R + (static_cast<double>(slot_n) + 0.5) * 2.0 * half_n);
    Packet p;
    p.box = geom::frenet_box(c, {half_t, half_n, R}, center, geom::Role::SpatialPlank,
                             geom::Interval{i * ilen, (i + 1) * ilen});
    p.coeff = coeff;
    p.carrier = c;
    p.interval = i;
    p.slot_t = slot_t;
    p.slot_n = slot_n;
    return p;
}

double window_axis_value(double u, const WindowProfile& w) {
    const double s = std::abs(u) - 0.5;
    if (s <= 0.0) return 1.0;
    const double q = 4.0 * s;
    return std::pow(1.0 + q * q, -w.decay);
}

double window_value(const OrientedBox& box, const Vec3& x, const WindowProfile& w) {
    const Vec3 u = box.to_box_coords(x);
    return window_axis_value(u.x, w) * window_axis_value(u.y, w) * window_axis_value(u.z, w);
}

double window_lp_mass(double p, const WindowProfile& w) {
    // 1 over the core plus two power tails; trapezoid on a stretched grid.
    double tail = 0.0;
    const int n = 4000;
    const double hmax = 8.0;
    double prev = 1.0;  // integrand at s = 0
    for (int k = 1; k <= n; ++k) {
        const double s = hmax * static_cast<double>(k) / n;
        const double q = 4.0 * s;
        const double v = std::pow(1.0 + q * q, -w.decay * p);
        tail += 0.5 * (prev + v) * (hmax / n);
        prev = v;
    }
    return 1.0 + 2.0 * tail;
}

PacketField::PacketField(std::vector<Packet> packets, WindowProfile window)
    : packets_(std::move(packets)), window_(window) {}

Complex PacketField::operator()(const Vec3& x) const {
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    Complex acc{0.0, 0.0};
    for (const auto& p : packets_) {
        const double chi = window_value(p.box, x, window_);
        if (chi < 1e-14) continue;
        const Vec3 xi = geom::curve_point(p.carrier);
        const double th = kTwoPi * dot(x, xi);
        acc += p.coeff * chi * Complex{std::cos(th), std::sin(th)};
    }
    return acc;
}

double PacketField::packet_lp_pth_power(std::size_t index, double p) const {
    const Packet& pk = packets_[index];
    const double mass = window_lp_mass(p, window_);
    return std::pow(std::abs(pk.coeff), p) * pk.box.volume() * mass * mass * mass;
}

PacketField synthesize_from_packets(const PacketEnsemble& ensemble, PacketSubset subset,
                                    WindowProfile window) {
    std::vector<Packet> packets;
    if (subset == PacketSubset::Plates || subset == PacketSubset::Both) {
        packets.insert(packets.end(), ensemble.plates.begin(), ensemble.plates.end());
    }
    if (subset == PacketSubset::Planks || subset == PacketSubset::Both) {
        packets.insert(packets.end(), ensemble.planks.begin(), ensemble.planks.end());
    }
    return PacketField(std::move(packets), window);
}

PacketEnsemble make_uniform_ensemble(double R, const FixtureSpec& spec, std::uint64_t seed) {
    const PacketLattice lat(R);
    if (spec.l * spec.Y != spec.m * spec.X) {
        throw std::domain_error("make_uniform_ensemble: need l Y = m X for a uniform design");
    }
    if (spec.X > spec.Y) throw std::domain_error("make_uniform_ensemble: need X <= Y");
    if (spec.n > lat.r16 || spec.m > lat.r16 || spec.Y > lat.r13 || spec.X > lat.r13) {
        throw std::domain_error("make_uniform_ensemble: first-sequence counts exceed capacity");
    }
    if (spec.N > lat.r16 || spec.Z1 > lat.r16 || spec.Z2 > lat.r13) {
        throw std::domain_error("make_uniform_ensemble: second-sequence counts exceed capacity");
    }
    if (spec.i_count > lat.i_count()) {
        throw std::domain_error("make_uniform_ensemble: too many intervals");
    }

    PacketEnsemble ens;
    ens.R = R;
    harness::Rng rng(seed);
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    auto height = [&](double h) -> Complex {
        if (!spec.random_phases) return {h, 0.0};
        const double th = kTwoPi * rng.next_double();
        return {h * std::cos(th), h * std::sin(th)};
    };

    for (long ii = 0; ii < spec.i_count; ++ii) {
        // Heavy fat plates Pi_0 .. Pi_{Y-1}; heavy J's are the first m of the
        // R^{1/6} subintervals of I.  J_k feeds Pi_{(kX + t) mod Y}: the block
        // sequence is consecutive integers, so each heavy Pi receives exactly
        // l = mX / Y contributing J's.
        for (long k = 0; k < spec.m; ++k) {
            const long j = ii * lat.r16 + k;
            for (long t = 0; t < spec.X; ++t) {
                const long pi = (k * spec.X + t) % spec.Y;
                for (long u = 0; u < spec.n; ++u) {
                    const long slot = pi * lat.r16 + u;
                    ens.plates.push_back(make_plate_packet(R, j, slot, height(spec.w)));
                }
            }
        }
        // Second sequence inside every heavy Pi: Z2 Sigma, Z1 tau per Sigma,
        // N planks per tau.
        for (long pi = 0; pi < spec.Y; ++pi) {
            for (long z2 = 0; z2 < spec.Z2; ++z2) {
                const long gt = pi * lat.r16 + z2 % lat.r16;
                const long gn = z2 / lat.r16;
                for (long z1 = 0; z1 < spec.Z1; ++z1) {
                    const long b = gn * lat.r16 + z1;
                    for (long nn = 0; nn < spec.N; ++nn) {
                        const long a = gt * lat.r16 + nn;
                        ens.planks.push_back(make_plank_packet(R, ii, a, b, height(spec.A)));
                    }
                }
            }
        }
    }
    return ens;
}

}  // namespace vinlab::fourier
