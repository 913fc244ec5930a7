#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "vinlab/fourier/exp_sum.hpp"
#include "vinlab/geom/box.hpp"

namespace vinlab::fourier {

/// Integer lattice bookkeeping for wave packets at scales R^{-1/2} (plates)
/// and R^{-1/3} (planks) inside [-R, R]^3.  Requires R = 2^{6k} so that all
/// the sixth-root group sizes are exact integers.
///
/// Plates of interval J sit at slots s in [0, R^{1/2}) along t(J); fat plates
/// Pi are runs of R^{1/6} slots.  Planks of interval I sit at (a, b) with
/// a in [0, R^{2/3}) along t and b in [0, R^{1/3}) along n; tau groups run
/// R^{1/6} consecutive a at fixed b, Sigma groups run R^{1/6} consecutive tau
/// in b, and Pi is a run of R^{1/3} consecutive a.
struct PacketLattice {
    double R = 0.0;
    long r16 = 0, r13 = 0, r12 = 0, r23 = 0;

    explicit PacketLattice(double R);

    long j_count() const { return r12; }  // intervals at scale R^{-1/2}
    long i_count() const { return r13; }  // intervals at scale R^{-1/3}
    long i_of_j(long j) const { return j / r16; }
    long pi_of_plate_slot(long s) const { return s / r16; }
    long pi_of_plank_slot(long a) const { return a / r13; }
    long tau_of_plank_slot(long a) const { return a / r16; }
    long sigma_of_n_slot(long b) const { return b / r16; }
};

struct Packet {
    geom::OrientedBox box;
    Complex coeff;
    double carrier = 0.0;  // frequency = gamma(carrier)
    long interval = 0;     // J index (plates) / I index (planks)
    long slot_t = 0;
    long slot_n = 0;
};

struct FirstSequenceParams {
    bool valid = false;
    double w = 0.0;
    long n = 0, X = 0, m = 0, l = 0, Y = 0;
};

struct SecondSequenceParams {
    bool valid = false;
    double A = 0.0;
    long N = 0, Z1 = 0, Z2 = 0;
};

struct PacketEnsemble {
    double R = 0.0;
    std::vector<Packet> plates;
    std::vector<Packet> planks;
    FirstSequenceParams first;
    SecondSequenceParams second;
};

Packet make_plate_packet(double R, long j, long slot, Complex coeff);
Packet make_plank_packet(double R, long i, long slot_t, long slot_n, Complex coeff);

/// Separable window: 1 inside the box, power tail
/// (1 + (4 max(0, |u| - 1/2))^2)^{-decay} per axis outside.
struct WindowProfile {
    double decay = 10.0;
};

double window_axis_value(double u, const WindowProfile& w);
double window_value(const geom::OrientedBox& box, const geom::Vec3& x, const WindowProfile& w);
/// One-axis mass integral of the window to the power p.
double window_lp_mass(double p, const WindowProfile& w);

enum class PacketSubset { Plates, Planks, Both };

/// Windowed synthesis F(x) = sum A chi_box(x) e(x . gamma(carrier)); linear in
/// the coefficients.  Overlapping identical boxes with different carriers are
/// simply summed.
class PacketField {
public:
    PacketField(std::vector<Packet> packets, WindowProfile window);

    Complex operator()(const geom::Vec3& x) const;
    const std::vector<Packet>& packets() const { return packets_; }
    const WindowProfile& window() const { return window_; }

    /// ||F_W||_p^p of a single packet, exact up to the 1D quadrature of the
    /// window mass: |A|^p |box| (I_p)^3 with I_p the per-axis mass.
    double packet_lp_pth_power(std::size_t index, double p) const;

private:
    std::vector<Packet> packets_;
    WindowProfile window_;
};

PacketField synthesize_from_packets(const PacketEnsemble& ensemble, PacketSubset subset,
                                    WindowProfile window = {});

/// Exactly uniform two-scale ensemble: every planted pigeonholing parameter is
/// attained with equality, making the ensemble its own analysis oracle.
/// Requires l * Y = m * X with X <= Y (cyclic block design) and all counts
/// within lattice capacities.
struct FixtureSpec {
    long n = 1, X = 1, m = 1, l = 1, Y = 1;
    long N = 1, Z1 = 1, Z2 = 1;
    double w = 1.0;  // plate height (dyadic)
    double A = 1.0;  // plank height (dyadic)
    long i_count = 1;
    bool random_phases = false;
};

PacketEnsemble make_uniform_ensemble(double R, const FixtureSpec& spec, std::uint64_t seed);

}  // namespace vinlab::fourier
