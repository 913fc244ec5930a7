#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vinlab/geom/box.hpp"
#include "vinlab/incidence/family.hpp"

namespace vinlab::incidence {

/// Axis grid of half-open cubes [origin + i*side, origin + (i+1)*side)^3.
/// The default grid tiles [-domain_half, domain_half]^3; the side must divide
/// the domain.
struct CubeGrid {
    double origin = 0.0;  // low corner of the grid
    double side = 0.0;
    long cells = 0;  // per axis

    static CubeGrid make(double domain_half, double side);
    static CubeGrid make_at(double origin, double side, long cells);
    geom::OrientedBox cube(long ix, long iy, long iz) const;
    std::uint64_t key(long ix, long iy, long iz) const {
        return (static_cast<std::uint64_t>(ix) * static_cast<std::uint64_t>(cells) +
                static_cast<std::uint64_t>(iy)) *
                   static_cast<std::uint64_t>(cells) +
               static_cast<std::uint64_t>(iz);
    }
};

/// Exact per-cube incidence counts: for every grid cube, the number of family
/// boxes whose closed intersection with the closed cube is nonempty.
/// Cubes never touched by any box are omitted.
struct RichCubeQuery {
    CubeGrid grid;
    std::vector<std::pair<std::uint64_t, int>> counts;  // (cell key, count), key-sorted
    std::vector<long> histogram;                        // histogram[k] = #cubes with count k

    /// |Q_r|: number of cubes intersecting at least r boxes.  Nonincreasing in r.
    long rich_count(long r) const;
    int max_count() const { return static_cast<int>(histogram.size()) - 1; }
};

/// Cells of `grid` whose closed cube intersects the box, via octree descent.
void collect_cells(const geom::OrientedBox& box, const CubeGrid& grid,
                   std::vector<std::uint64_t>& out);

RichCubeQuery count_rich_cubes(const std::vector<geom::OrientedBox>& boxes,
                               const CubeGrid& grid);
RichCubeQuery count_rich_cubes(const std::vector<geom::OrientedBox>& boxes, double domain_half,
                               double cube_side);
RichCubeQuery count_rich_cubes(const BoxFamily& family, double cube_side);

/// All-cubes scan (no spatial acceleration).  `map` optionally transforms each
/// grid cube before testing, for checking counting covariance under the
/// measure-preserving shears.
std::vector<int> brute_force_counts(const std::vector<geom::OrientedBox>& boxes,
                                    const CubeGrid& grid,
                                    const std::optional<geom::Mat3>& map = std::nullopt);

}  // namespace vinlab::incidence
