#include "vinlab/incidence/family.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "vinlab/harness/rng.hpp"

namespace vinlab::incidence {

using geom::OrientedBox;
using geom::Vec3;

namespace {

long exact_root(double R, double num, double den, const char* what) {
    const double v = std::pow(R, num / den);
    const long r = std::lround(v);
    if (std::abs(v - static_cast<double>(r)) > 1e-6) {
        throw std::domain_error(std::string("slot_scheme: ") + what +
                                " requires an integer power of the scale");
    }
    return r;
}

}  // namespace

const char* family_kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::Tube: return "tube";
        case FamilyKind::Plate: return "plate";
        case FamilyKind::PlankL4: return "plank_l4";
        case FamilyKind::PlankSp: return "plank_sp";
    }
    return "?";
}

const char* gen_mode_name(GenMode m) {
    switch (m) {
        case GenMode::Uniform: return "uniform-random";
        case GenMode::Bush: return "bush";
        case GenMode::Plany: return "plany";
        case GenMode::Grid: return "grid";
    }
    return "?";
}

GenMode gen_mode_from_name(const std::string& s) {
    if (s == "uniform-random" || s == "uniform") return GenMode::Uniform;
    if (s == "bush") return GenMode::Bush;
    if (s == "plany") return GenMode::Plany;
    if (s == "grid") return GenMode::Grid;
    throw std::invalid_argument("unknown generation mode: " + s);
}

SlotScheme slot_scheme(FamilyKind kind, double scale) {
    SlotScheme s;
    s.scale = scale;
    switch (kind) {
        case FamilyKind::Tube: {
            const double R = scale;
            s.domain_half = R;
            s.directions = static_cast<int>(exact_root(R, 1, 3, "tube directions"));
            s.dir_step = 1.0 / static_cast<double>(s.directions);
            s.slots_t = exact_root(R, 1, 3, "tube t-slots");
            s.slots_n = exact_root(R, 1, 3, "tube n-slots");
            s.group_t = 1;
            s.group_n = exact_root(R, 1, 6, "tube B-groups");
            break;
        }
        case FamilyKind::Plate: {
            const double dinv = 1.0 / scale;  // scale = delta
            s.domain_half = dinv * dinv;
            s.directions = static_cast<int>(std::lround(dinv));
            s.dir_step = scale;
            s.slots_t = std::lround(dinv);
            s.slots_n = 1;
            s.group_t = 1;
            s.group_n = 1;
            break;
        }
        case FamilyKind::PlankL4: {
            const double dinv = 1.0 / scale;
            s.domain_half = dinv * dinv * dinv;
            s.directions = static_cast<int>(std::lround(dinv));
            s.dir_step = scale;
            s.slots_t = std::lround(dinv * dinv);
            s.slots_n = std::lround(dinv);
            s.group_t = std::lround(dinv);  // planks per tube along t
            s.group_n = 1;
            break;
        }
        case FamilyKind::PlankSp: {
            const double R = scale;
            s.domain_half = R;
            s.directions = static_cast<int>(exact_root(R, 1, 3, "plank directions"));
            s.dir_step = 1.0 / static_cast<double>(s.directions);
            s.slots_t = exact_root(R, 2, 3, "plank t-slots");
            s.slots_n = exact_root(R, 1, 3, "plank n-slots");
            s.group_t = exact_root(R, 1, 6, "tau groups");
            s.group_n = exact_root(R, 1, 6, "Sigma groups");
            break;
        }
    }
    return s;
}

namespace {

OrientedBox species_box(FamilyKind kind, double scale, double c, const Vec3& center) {
    switch (kind) {
        case FamilyKind::Tube: return geom::tube(scale, c, center);
        case FamilyKind::Plate: return geom::plate(scale, c, center);
        case FamilyKind::PlankL4: return geom::spatial_plank_delta(scale, c, center);
        case FamilyKind::PlankSp: return geom::spatial_plank(scale, c, center);
    }
    throw std::logic_error("species_box: unreachable");
}

Vec3 slot_center(const SlotScheme& s, double c, long it, long in) {
    const geom::Frame f = geom::frenet_frame(c);
    const double step_t = 2.0 * s.domain_half / static_cast<double>(s.slots_t);
    const double step_n = 2.0 * s.domain_half / static_cast<double>(s.slots_n);
    const double t_off = -s.domain_half + (static_cast<double>(it) + 0.5) * step_t;
    const double n_off = -s.domain_half + (static_cast<double>(in) + 0.5) * step_n;
    return f.tangent * t_off + f.normal * n_off;
}

/// Cap counters for one direction; key layout depends on the family kind.
struct CapTracker {
    const FamilyKind kind;
    const SlotScheme& s;
    const Caps& caps;
    long dir_count = 0;
    std::map<long, long> groupA;  // plate S_I / tube-of-planks counts
    std::map<long, long> groupB;  // box B_I counts

    bool admissible(long it, long in, std::string* binding) const {
        switch (kind) {
            case FamilyKind::Tube: {
                auto a = groupA.find(it);
                if (a != groupA.end() && a->second >= caps.N) {
                    if (binding) *binding = "N";
                    return false;
                }
                const long bkey = it * s.slots_n + in / s.group_n;
                auto b = groupB.find(bkey);
                if (b != groupB.end() && b->second >= caps.N1) {
                    if (binding) *binding = "N1";
                    return false;
                }
                return true;
            }
            case FamilyKind::Plate: {
                if (dir_count >= caps.N) {
                    if (binding) *binding = "N";
                    return false;
                }
                return true;
            }
            case FamilyKind::PlankL4: {
                if (dir_count >= caps.M) {
                    if (binding) *binding = "M";
                    return false;
                }
                const long tkey = (it / s.group_t) * s.slots_n + in;
                auto a = groupA.find(tkey);
                if (a != groupA.end() && a->second >= caps.N) {
                    if (binding) *binding = "N";
                    return false;
                }
                return true;
            }
            case FamilyKind::PlankSp:
                return true;  // structural generation enforces (Sp1)/(Sp2) directly
        }
        return true;
    }

    void place(long it, long in) {
        ++dir_count;
        switch (kind) {
            case FamilyKind::Tube:
                ++groupA[it];
                ++groupB[it * s.slots_n + in / s.group_n];
                break;
            case FamilyKind::PlankL4:
                ++groupA[(it / s.group_t) * s.slots_n + in];
                break;
            default:
                break;
        }
    }
};

long max_placeable(FamilyKind kind, const SlotScheme& s, const Caps& caps,
                   std::string* binding) {
    switch (kind) {
        case FamilyKind::Tube: {
            const long byN = std::min(caps.N, s.slots_n) * s.slots_t;
            const long byN1 = std::min(caps.N1, s.group_n) * s.slots_t * (s.slots_n / s.group_n);
            if (binding) *binding = byN <= byN1 ? "N" : "N1";
            return std::min({byN, byN1, s.slots_per_dir()});
        }
        case FamilyKind::Plate:
            if (binding) *binding = "N";
            return std::min(caps.N, s.slots_per_dir());
        case FamilyKind::PlankL4: {
            const long tubes = (s.slots_t / s.group_t) * s.slots_n;
            const long byN = std::min(caps.N, s.group_t) * tubes;
            if (binding) *binding = std::min(caps.M, s.slots_per_dir()) <= byN ? "M" : "N";
            return std::min({caps.M, byN, s.slots_per_dir()});
        }
        case FamilyKind::PlankSp:
            return s.slots_per_dir();
    }
    return 0;
}

void generate_structured_sp(BoxFamily& fam, double R, const Caps& caps, double density,
                            std::uint64_t seed) {
    const SlotScheme& s = fam.scheme();
    if (caps.N > s.group_t) throw InfeasibleFamily("N");
    if (caps.Z1 > s.group_n) throw InfeasibleFamily("Z1");

    harness::Rng root(seed);
    for (int dir = 0; dir < s.directions; ++dir) {
        harness::Rng rng = root.stream(static_cast<std::uint64_t>(dir));
        const double c = dir * s.dir_step;
        const long sig_t = s.slots_t / s.group_t;
        const long sig_n = s.slots_n / s.group_n;
        const long sigma_slots = sig_t * sig_n;
        const long target = std::max<long>(1, std::lround(density * sigma_slots));

        std::set<long> chosen;
        while (static_cast<long>(chosen.size()) < std::min(target, sigma_slots)) {
            chosen.insert(static_cast<long>(rng.next_below(static_cast<std::uint64_t>(sigma_slots))));
        }
        for (long sig : chosen) {
            const long gt = sig / sig_n;
            const long gn = sig % sig_n;
            // Z1 heavy tau inside this Sigma (distinct n-subslots).
            std::set<long> taus;
            while (static_cast<long>(taus.size()) < caps.Z1) {
                taus.insert(static_cast<long>(rng.next_below(static_cast<std::uint64_t>(s.group_n))));
            }
            for (long tn : taus) {
                const long in = gn * s.group_n + tn;
                // N planks inside this tau (distinct t-subslots).
                std::set<long> planks;
                while (static_cast<long>(planks.size()) < caps.N) {
                    planks.insert(
                        static_cast<long>(rng.next_below(static_cast<std::uint64_t>(s.group_t))));
                }
                for (long pt : planks) {
                    const long it = gt * s.group_t + pt;
                    FamilyBox fb;
                    fb.dir = dir;
                    fb.slot_t = it;
                    fb.slot_n = in;
                    fb.box = species_box(FamilyKind::PlankSp, R, c, slot_center(s, c, it, in));
                    fam.add(std::move(fb));
                }
            }
        }
    }
}

}  // namespace

std::vector<OrientedBox> BoxFamily::plain_boxes() const {
    std::vector<OrientedBox> out;
    out.reserve(boxes_.size());
    for (const auto& fb : boxes_) out.push_back(fb.box);
    return out;
}

void BoxFamily::check_caps() const {
    std::map<std::pair<int, long>, long> a, b;
    std::map<int, long> per_dir;
    for (const auto& fb : boxes_) {
        ++per_dir[fb.dir];
        switch (kind_) {
            case FamilyKind::Tube:
                ++a[{fb.dir, fb.slot_t}];
                ++b[{fb.dir, fb.slot_t * scheme_.slots_n + fb.slot_n / scheme_.group_n}];
                break;
            case FamilyKind::PlankL4:
                ++a[{fb.dir, (fb.slot_t / scheme_.group_t) * scheme_.slots_n + fb.slot_n}];
                break;
            case FamilyKind::PlankSp:
                ++a[{fb.dir, (fb.slot_t / scheme_.group_t) * scheme_.slots_n + fb.slot_n}];
                ++b[{fb.dir, (fb.slot_t / scheme_.group_t) * scheme_.slots_n +
                                 (fb.slot_n / scheme_.group_n) * scheme_.group_n}];
                break;
            default:
                break;
        }
    }
    switch (kind_) {
        case FamilyKind::Tube:
            for (const auto& [k, v] : a)
                if (v > caps_.N) throw std::logic_error("cap N violated");
            for (const auto& [k, v] : b)
                if (v > caps_.N1) throw std::logic_error("cap N1 violated");
            break;
        case FamilyKind::Plate:
            for (const auto& [k, v] : per_dir)
                if (v > caps_.N) throw std::logic_error("cap N violated");
            break;
        case FamilyKind::PlankL4:
            for (const auto& [k, v] : per_dir)
                if (v > caps_.M) throw std::logic_error("cap M violated");
            for (const auto& [k, v] : a)
                if (v > caps_.N) throw std::logic_error("cap N violated");
            break;
        case FamilyKind::PlankSp: {
            for (const auto& [k, v] : a)
                if (v != caps_.N) throw std::logic_error("(Sp1) violated: tau not exactly N");
            std::map<std::pair<int, long>, long> heavy_per_sigma;
            for (const auto& [k, v] : a) {
                (void)v;
                ++heavy_per_sigma[{k.first,
                                   (k.second / scheme_.slots_n) * scheme_.slots_n +
                                       ((k.second % scheme_.slots_n) / scheme_.group_n)}];
            }
            for (const auto& [k, v] : heavy_per_sigma)
                if (v != caps_.Z1) throw std::logic_error("(Sp2) violated: Sigma not exactly Z1");
            break;
        }
    }
}

BoxFamily generate_family(FamilyKind kind, double scale, Caps caps, double density, GenMode mode,
                          std::uint64_t seed) {
    SlotScheme scheme = slot_scheme(kind, scale);
    BoxFamily fam(kind, scale, caps, mode, seed, scheme);

    if (kind == FamilyKind::PlankSp) {
        generate_structured_sp(fam, scale, caps, density, seed);
        fam.check_caps();
        return fam;
    }

    harness::Rng root(seed);
    for (int dir = 0; dir < scheme.directions; ++dir) {
        harness::Rng rng = root.stream(static_cast<std::uint64_t>(dir));
        const double c = dir * scheme.dir_step;
        CapTracker tracker{kind, scheme, caps, 0, {}, {}};

        std::string binding;
        const long allowed = max_placeable(kind, scheme, caps, &binding);
        // Density is the occupied fraction of the cap-admissible slots.
        long target;
        if (mode == GenMode::Bush) {
            target = 1;
        } else {
            target = std::max<long>(1, std::lround(density * static_cast<double>(allowed)));
        }
        if (target > allowed || allowed == 0) throw InfeasibleFamily(binding);

        std::set<std::pair<long, long>> used;
        auto try_place = [&](long it, long in) -> bool {
            if (used.count({it, in})) return false;
            if (!tracker.admissible(it, in, nullptr)) return false;
            used.insert({it, in});
            tracker.place(it, in);
            FamilyBox fb;
            fb.dir = dir;
            fb.slot_t = it;
            fb.slot_n = in;
            fb.box = species_box(kind, scale, c, slot_center(scheme, c, it, in));
            fam.add(std::move(fb));
            return true;
        };

        long placed = 0;
        switch (mode) {
            case GenMode::Bush: {
                // One box per direction, centered at the origin.
                FamilyBox fb;
                fb.dir = dir;
                fb.slot_t = scheme.slots_t / 2;
                fb.slot_n = scheme.slots_n / 2;
                fb.box = species_box(kind, scale, c, {0, 0, 0});
                used.insert({fb.slot_t, fb.slot_n});
                tracker.place(fb.slot_t, fb.slot_n);
                fam.add(std::move(fb));
                placed = 1;
                break;
            }
            case GenMode::Uniform: {
                long attempts = 0;
                const long max_attempts = 64 * scheme.slots_per_dir();
                while (placed < target && attempts < max_attempts) {
                    ++attempts;
                    const long lin = static_cast<long>(
                        rng.next_below(static_cast<std::uint64_t>(scheme.slots_per_dir())));
                    if (try_place(lin / scheme.slots_n, lin % scheme.slots_n)) ++placed;
                }
                // Deterministic sweep if rejection sampling stalls near the caps.
                for (long lin = 0; placed < target && lin < scheme.slots_per_dir(); ++lin) {
                    if (try_place(lin / scheme.slots_n, lin % scheme.slots_n)) ++placed;
                }
                break;
            }
            case GenMode::Plany:
                for (long lin = 0; placed < target && lin < scheme.slots_per_dir(); ++lin) {
                    if (try_place(lin / scheme.slots_n, lin % scheme.slots_n)) ++placed;
                }
                break;
            case GenMode::Grid: {
                for (long k = 0; placed < target && k < target; ++k) {
                    long lin = (k * scheme.slots_per_dir()) / target;
                    for (long probe = 0; probe < scheme.slots_per_dir(); ++probe) {
                        const long l = (lin + probe) % scheme.slots_per_dir();
                        if (try_place(l / scheme.slots_n, l % scheme.slots_n)) {
                            ++placed;
                            break;
                        }
                    }
                }
                break;
            }
        }
        if (placed < target) throw InfeasibleFamily(binding);
    }

    fam.check_caps();
    return fam;
}

}  // namespace vinlab::incidence
