#include "vinlab/geom/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace vinlab::geom {

namespace {

constexpr double kDetTol = 1e-13;
constexpr double kFeasRel = 1e-9;
constexpr double kEmptyRel = 1e-12;

HalfSpace normalized_halfspace(const HalfSpace& h) {
    const double len = norm(h.n);
    if (!(len > 0.0)) throw std::invalid_argument("half-space with zero normal");
    return {h.n / len, h.d / len};
}

bool same_plane(const HalfSpace& a, const HalfSpace& b, double scale) {
    return norm_inf(a.n - b.n) < 1e-12 && std::abs(a.d - b.d) < 1e-12 * (1.0 + scale);
}

}  // namespace

ConvexPolytope::ConvexPolytope(std::vector<HalfSpace> halfspaces, std::optional<Aabb> bounds)
    : bounds_(bounds) {
    halfspaces_.reserve(halfspaces.size());
    for (const auto& h : halfspaces) clip(h);
}

void ConvexPolytope::clip(const HalfSpace& h) {
    const HalfSpace n = normalized_halfspace(h);
    for (auto& existing : halfspaces_) {
        if (same_plane(existing, n, std::abs(n.d))) {
            existing.d = std::min(existing.d, n.d);
            invalidate();
            return;
        }
    }
    halfspaces_.push_back(n);
    invalidate();
}

void ConvexPolytope::set_bounds(const Aabb& b) {
    bounds_ = b;
    invalidate();
}

bool ConvexPolytope::contains(const Vec3& x, double tol) const {
    for (const auto& h : halfspaces_) {
        if (h.excess(x) > tol) return false;
    }
    if (bounds_) {
        if (x.x < bounds_->lo.x - tol || x.x > bounds_->hi.x + tol) return false;
        if (x.y < bounds_->lo.y - tol || x.y > bounds_->hi.y + tol) return false;
        if (x.z < bounds_->lo.z - tol || x.z > bounds_->hi.z + tol) return false;
    }
    return true;
}

std::vector<HalfSpace> ConvexPolytope::effective_planes() const {
    std::vector<HalfSpace> planes = halfspaces_;
    if (bounds_) {
        // Bound planes may coincide with box faces; keep the tighter copy so
        // no facet is fanned twice in the volume sum.
        const HalfSpace walls[6] = {{{1, 0, 0}, bounds_->hi.x},  {{-1, 0, 0}, -bounds_->lo.x},
                                    {{0, 1, 0}, bounds_->hi.y},  {{0, -1, 0}, -bounds_->lo.y},
                                    {{0, 0, 1}, bounds_->hi.z},  {{0, 0, -1}, -bounds_->lo.z}};
        for (const auto& w : walls) {
            bool merged = false;
            for (auto& existing : planes) {
                if (norm_inf(existing.n - w.n) < 1e-12 &&
                    std::abs(existing.d - w.d) < 1e-9 * (1.0 + std::abs(w.d))) {
                    existing.d = std::min(existing.d, w.d);
                    merged = true;
                    break;
                }
            }
            if (!merged) planes.push_back(w);
        }
    }
    return planes;
}

const std::vector<Vec3>& ConvexPolytope::vertices() const {
    if (vertex_cache_) return *vertex_cache_;

    const std::vector<HalfSpace> planes = effective_planes();
    const std::size_t m = planes.size();
    std::vector<Vec3> verts;

    double offset_scale = 1.0;
    for (const auto& h : planes) offset_scale = std::max(offset_scale, std::abs(h.d));

    for (std::size_t i = 0; i + 2 < m; ++i) {
        for (std::size_t j = i + 1; j + 1 < m; ++j) {
            for (std::size_t k = j + 1; k < m; ++k) {
                const Mat3 M = Mat3::from_rows(planes[i].n, planes[j].n, planes[k].n);
                const double det = M.det();
                if (std::abs(det) < kDetTol) continue;
                const Vec3 x = M.inverse() * Vec3{planes[i].d, planes[j].d, planes[k].d};
                if (!std::isfinite(x.x) || !std::isfinite(x.y) || !std::isfinite(x.z)) continue;

                const double tol = kFeasRel * (offset_scale + norm_inf(x) + 1.0);
                bool feasible = true;
                for (const auto& h : planes) {
                    if (h.excess(x) > tol) {
                        feasible = false;
                        break;
                    }
                }
                if (!feasible) continue;

                bool duplicate = false;
                const double point_tol = 1e-9 * (1.0 + norm_inf(x));
                for (const auto& v : verts) {
                    if (norm_inf(v - x) < point_tol) {
                        duplicate = true;
                        break;
                    }
                }
                if (!duplicate) verts.push_back(x);
            }
        }
    }

    vertex_cache_ = std::move(verts);
    return *vertex_cache_;
}

double ConvexPolytope::volume() const {
    const std::vector<Vec3>& verts = vertices();
    if (verts.size() < 4) return 0.0;

    const std::vector<HalfSpace> planes = effective_planes();

    Vec3 centroid{0, 0, 0};
    double diam = 0.0;
    for (const auto& v : verts) centroid += v;
    centroid = centroid / static_cast<double>(verts.size());
    for (const auto& v : verts) diam = std::max(diam, norm_inf(v - centroid));

    const double face_tol = 1e-8 * (diam + 1.0);
    double vol = 0.0;
    std::vector<Vec3> face;
    std::vector<std::size_t> face_idx;
    std::set<std::vector<std::size_t>> seen_faces;
    std::vector<std::pair<double, std::size_t>> order;

    for (const auto& h : planes) {
        face.clear();
        face_idx.clear();
        for (std::size_t vi = 0; vi < verts.size(); ++vi) {
            if (std::abs(h.excess(verts[vi])) <= face_tol) {
                face.push_back(verts[vi]);
                face_idx.push_back(vi);
            }
        }
        if (face.size() < 3) continue;
        // Coincident planes (shared faces of different boxes) must fan once.
        if (!seen_faces.insert(face_idx).second) continue;

        Vec3 fc{0, 0, 0};
        for (const auto& v : face) fc += v;
        fc = fc / static_cast<double>(face.size());

        // In-plane basis for angular ordering of the (convex) facet polygon.
        Vec3 u = cross(h.n, std::abs(h.n.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0});
        u = normalized(u);
        const Vec3 w = cross(h.n, u);

        order.clear();
        for (std::size_t idx = 0; idx < face.size(); ++idx) {
            const Vec3 r = face[idx] - fc;
            order.emplace_back(std::atan2(dot(r, w), dot(r, u)), idx);
        }
        std::sort(order.begin(), order.end());

        for (std::size_t t = 1; t + 1 < order.size(); ++t) {
            const Vec3 a = face[order[0].second] - centroid;
            const Vec3 b = face[order[t].second] - centroid;
            const Vec3 c = face[order[t + 1].second] - centroid;
            vol += std::abs(dot(a, cross(b, c))) / 6.0;
        }
    }

    // Sliver floor relative to the bounding volume.
    double bound_vol = 0.0;
    if (bounds_) {
        const Vec3 ext = bounds_->hi - bounds_->lo;
        bound_vol = ext.x * ext.y * ext.z;
    } else {
        bound_vol = std::pow(2.0 * diam, 3);
    }
    if (vol < kEmptyRel * bound_vol) return 0.0;
    return vol;
}

ConvexPolytope intersect_boxes(const std::vector<OrientedBox>& boxes) {
    if (boxes.empty()) throw std::invalid_argument("intersect_boxes: need at least one box");
    ConvexPolytope poly;
    Aabb bounds = boxes.front().aabb();
    for (const auto& b : boxes) {
        for (const auto& h : b.halfspaces()) poly.clip(h);
        const Aabb bb = b.aabb();
        bounds.lo = {std::max(bounds.lo.x, bb.lo.x), std::max(bounds.lo.y, bb.lo.y),
                     std::max(bounds.lo.z, bb.lo.z)};
        bounds.hi = {std::min(bounds.hi.x, bb.hi.x), std::min(bounds.hi.y, bb.hi.y),
                     std::min(bounds.hi.z, bb.hi.z)};
    }
    if (bounds.lo.x > bounds.hi.x || bounds.lo.y > bounds.hi.y || bounds.lo.z > bounds.hi.z) {
        // Disjoint AABBs: normalize to a degenerate (empty) bounding region.
        bounds.hi = bounds.lo;
    }
    poly.set_bounds(bounds);
    return poly;
}

double polytope_volume(const ConvexPolytope& p) {
    if (p.halfspaces().empty() && !p.bounds()) {
        throw std::domain_error("polytope_volume: unbounded (no half-spaces, no bounds)");
    }
    if (!p.bounds()) {
        // Reject polytopes with a recession direction.  Candidate directions:
        // +/- face normals, pairwise normal cross products, coordinate axes.
        const auto& hs = p.halfspaces();
        std::vector<Vec3> candidates = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                                        {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
        for (const auto& h : hs) {
            candidates.push_back(h.n);
            candidates.push_back(-h.n);
        }
        for (std::size_t i = 0; i < hs.size(); ++i) {
            for (std::size_t j = i + 1; j < hs.size(); ++j) {
                const Vec3 c = cross(hs[i].n, hs[j].n);
                if (norm(c) > 1e-12) {
                    candidates.push_back(normalized(c));
                    candidates.push_back(normalized(c) * -1.0);
                }
            }
        }
        bool has_recession = false;
        for (const auto& dir : candidates) {
            bool recession = true;
            for (const auto& h : hs) {
                if (dot(h.n, dir) > 1e-12) {
                    recession = false;
                    break;
                }
            }
            if (recession) {
                has_recession = true;
                break;
            }
        }
        if (has_recession) {
            // Distinguish a genuinely unbounded region from an infeasible one.
            std::vector<Vec3> probes = {{0, 0, 0}};
            for (const auto& h : hs) probes.push_back(h.n * h.d);
            for (const auto& v : p.vertices()) probes.push_back(v);
            double scale = 1.0;
            for (const auto& h : hs) scale = std::max(scale, std::abs(h.d));
            for (const auto& x : probes) {
                if (p.contains(x, 1e-9 * scale)) {
                    throw std::domain_error(
                        "polytope_volume: unbounded input without bounding cube");
                }
            }
            return 0.0;
        }
    }
    return p.volume();
}

}  // namespace vinlab::geom
