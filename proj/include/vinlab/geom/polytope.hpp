#pragma once

#include <optional>
#include <vector>

#include "vinlab/geom/box.hpp"

namespace vinlab::geom {

/// Intersection of half-spaces n . x <= d.  Volumes are computed by
/// enumerating vertices (all feasible triple-plane intersections) and fanning
/// the facet polygons into tetrahedra around the vertex centroid.
///
/// Volumes below 1e-12 x (bounding volume) are reported as zero, so that
/// face-touching configurations do not leak slivers into incidence counts.
class ConvexPolytope {
public:
    ConvexPolytope() = default;
    explicit ConvexPolytope(std::vector<HalfSpace> halfspaces,
                            std::optional<Aabb> bounds = std::nullopt);

    const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }
    const std::optional<Aabb>& bounds() const { return bounds_; }

    /// Clip by one more half-space.  Never increases the volume.
    void clip(const HalfSpace& h);

    /// Declare a bounding region (clipped in before any volume computation).
    void set_bounds(const Aabb& b);

    bool contains(const Vec3& x, double tol = 0.0) const;

    /// Feasible triple-plane intersection points (deduplicated).
    const std::vector<Vec3>& vertices() const;

    double volume() const;

    bool empty() const { return volume() <= 0.0; }

private:
    std::vector<HalfSpace> effective_planes() const;
    void invalidate() { vertex_cache_.reset(); }

    std::vector<HalfSpace> halfspaces_;
    std::optional<Aabb> bounds_;
    mutable std::optional<std::vector<Vec3>> vertex_cache_;
};

/// Polytope of points lying in every box.  Requires at least one box; the
/// result carries the intersection of the boxes' AABBs as bounds.
ConvexPolytope intersect_boxes(const std::vector<OrientedBox>& boxes);

/// Exact volume of the (bounded) half-space intersection; 0 for empty input.
/// Throws std::domain_error when the polytope is unbounded and carries no
/// declared bounds.
double polytope_volume(const ConvexPolytope& p);

}  // namespace vinlab::geom
