#pragma once

#include <vector>

#include "vinlab/geom/box.hpp"

namespace vinlab::partition {

bool is_dyadic(double x);

/// CP_sigma: the small planks Theta(sigma, s') with s' = k * R^{-1/3} / sigma
/// evenly spaced over [0, 1] (offset 0), about sigma * R^{1/3} of them.
class CpFamily {
public:
    CpFamily(double R, double sigma);

    double R() const { return R_; }
    double sigma() const { return sigma_; }
    double spacing() const { return spacing_; }
    int size() const { return static_cast<int>(planks_.size()); }

    double shift(int k) const { return k * spacing_; }
    const geom::OrientedBox& plank(int k) const { return planks_[static_cast<std::size_t>(k)]; }

    /// Indices k with |shift(k) - c| <= spacing (the association set S_Theta of
    /// the origin-centered plank theta_c).
    std::vector<int> associated(double c) const;

private:
    double R_, sigma_, spacing_;
    std::vector<geom::OrientedBox> planks_;
};

CpFamily build_cp_family(double R, double sigma);

enum class ClassifyStatus { Ok, NotInUnion };

struct Classification {
    ClassifyStatus status = ClassifyStatus::NotInUnion;
    double sigma = 0.0;       // assigned dyadic layer
    int theta_index = -1;     // best plank of CP_sigma at the membership factor
    int multiplicity = 0;     // #{Theta in CP_sigma : w in f * Theta}, f = membership_factor
};

struct PartitionParams {
    /// Enlargement for layer membership (Omega_{<=sigma} = union of f * Theta).
    /// The default 1 keeps the layer sets nested exactly on the dyadic grid.
    double layer_factor = 1.0;
    /// Enlargement for the association / multiplicity tests.
    double membership_factor = 49.0;
};

/// Precomputed layer stack: one CP family per dyadic sigma in [R^{-1/3}, 1].
class PartitionIndex {
public:
    explicit PartitionIndex(double R);

    double R() const { return R_; }
    int layer_count() const { return static_cast<int>(families_.size()); }
    const CpFamily& family(int i) const { return families_[static_cast<std::size_t>(i)]; }

    int direction_count() const { return directions_; }
    /// Origin-centered frequency plank theta_c, c = k * R^{-1/3}.
    const geom::OrientedBox& theta(int k) const { return thetas_[static_cast<std::size_t>(k)]; }

    bool in_union(const geom::Vec3& w) const;
    Classification classify(const geom::Vec3& w, const PartitionParams& params = {}) const;

private:
    double R_;
    int directions_;
    std::vector<CpFamily> families_;           // sigma increasing, R^{-1/3} ... 1
    std::vector<geom::OrientedBox> thetas_;
};

Classification classify_point(const geom::Vec3& w, double R, const PartitionParams& params = {});

}  // namespace vinlab::partition
