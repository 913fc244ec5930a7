#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "vinlab/geom/box.hpp"

namespace vinlab::incidence {

/// Species of generated box families and the spacing systems they obey.
///
/// Tube:    (R^{2/3}, R^{2/3}, R) tubes in [-R, R]^3.  Cap N per plate S_I
///          (slots sharing the tangent index) and N1 per box B_I (tangent
///          index + groups of R^{1/6} normal slots).
/// Plate:   (d^{-1}, d^{-2}, d^{-2}) plates in [-d^{-2}, d^{-2}]^3, at most N
///          per direction.
/// PlankL4: (d^{-1}, d^{-2}, d^{-3}) planks in [-d^{-3}, d^{-3}]^3, at most M
///          per direction and N per containing (d^{-2}, d^{-2}, d^{-3}) tube.
/// PlankSp: (R^{1/3}, R^{2/3}, R) planks in [-R, R]^3 built so every nonempty
///          tau holds exactly N planks and every nonempty Sigma exactly Z1
///          heavy tau.
enum class FamilyKind { Tube, Plate, PlankL4, PlankSp };

enum class GenMode { Uniform, Bush, Plany, Grid };

const char* family_kind_name(FamilyKind k);
const char* gen_mode_name(GenMode m);
GenMode gen_mode_from_name(const std::string& s);

struct Caps {
    long N = std::numeric_limits<long>::max();
    long N1 = std::numeric_limits<long>::max();
    long M = std::numeric_limits<long>::max();
    long Z1 = std::numeric_limits<long>::max();
};

struct InfeasibleFamily : std::runtime_error {
    explicit InfeasibleFamily(const std::string& cap)
        : std::runtime_error("family generation infeasible; binding cap: " + cap),
          binding_cap(cap) {}
    std::string binding_cap;
};

struct FamilyBox {
    geom::OrientedBox box;
    int dir = 0;     // direction (interval) index
    long slot_t = 0; // slot index along the tangent axis
    long slot_n = 0; // slot index along the normal axis
};

/// Slot bookkeeping for one family species.
struct SlotScheme {
    double scale = 0.0;       // R or delta^{-1}-side parameter, per kind
    double domain_half = 0.0; // ambient box [-L, L]^3
    int directions = 0;
    double dir_step = 0.0;    // interval length
    long slots_t = 0;
    long slots_n = 0;
    long group_t = 1;  // slots per tau/B group along t
    long group_n = 1;  // slots per group along n
    long slots_per_dir() const { return slots_t * slots_n; }
};

class BoxFamily {
public:
    BoxFamily(FamilyKind kind, double scale, Caps caps, GenMode mode, std::uint64_t seed,
              SlotScheme scheme)
        : kind_(kind), scale_(scale), caps_(caps), mode_(mode), seed_(seed), scheme_(scheme) {}

    FamilyKind kind() const { return kind_; }
    double scale() const { return scale_; }
    const Caps& caps() const { return caps_; }
    GenMode mode() const { return mode_; }
    std::uint64_t seed() const { return seed_; }
    const SlotScheme& scheme() const { return scheme_; }
    double domain_half() const { return scheme_.domain_half; }

    const std::vector<FamilyBox>& boxes() const { return boxes_; }
    std::size_t size() const { return boxes_.size(); }
    void add(FamilyBox fb) { boxes_.push_back(std::move(fb)); }

    std::vector<geom::OrientedBox> plain_boxes() const;

    /// Recounts every declared cap; throws std::logic_error on violation.
    void check_caps() const;

private:
    FamilyKind kind_;
    double scale_;
    Caps caps_;
    GenMode mode_;
    std::uint64_t seed_;
    SlotScheme scheme_;
    std::vector<FamilyBox> boxes_;
};

SlotScheme slot_scheme(FamilyKind kind, double scale);

/// Deterministic family generation.  `density` is the target fraction of
/// slots per direction (Uniform/Grid) or the fraction of heavy Sigma slots
/// (PlankSp).  Throws InfeasibleFamily when the target count cannot be placed
/// under the declared caps, naming the binding cap.
BoxFamily generate_family(FamilyKind kind, double scale, Caps caps, double density, GenMode mode,
                          std::uint64_t seed);

}  // namespace vinlab::incidence
