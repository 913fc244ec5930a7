#pragma once

#include "vinlab/geom/box.hpp"

namespace vinlab::incidence {

/// Exact separating-axis test for two (closed) parallelepipeds.  Touching
/// counts as intersecting.  Candidate axes: both boxes' face normals and the
/// nine pairwise edge cross products.
bool boxes_intersect(const geom::OrientedBox& a, const geom::OrientedBox& b);

}  // namespace vinlab::incidence
