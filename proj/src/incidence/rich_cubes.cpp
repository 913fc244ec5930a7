#include "vinlab/incidence/rich_cubes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vinlab/incidence/overlap.hpp"

namespace vinlab::incidence {

using geom::OrientedBox;
using geom::Vec3;

CubeGrid CubeGrid::make(double domain_half, double side) {
    CubeGrid g;
    g.origin = -domain_half;
    g.side = side;
    const double cells = 2.0 * domain_half / side;
    g.cells = std::lround(cells);
    if (std::abs(cells - static_cast<double>(g.cells)) > 1e-9 || g.cells <= 0) {
        throw std::domain_error("CubeGrid: cube side must divide the ambient box");
    }
    return g;
}

CubeGrid CubeGrid::make_at(double origin, double side, long cells) {
    if (!(side > 0.0) || cells <= 0) throw std::domain_error("CubeGrid: bad grid");
    CubeGrid g;
    g.origin = origin;
    g.side = side;
    g.cells = cells;
    return g;
}

OrientedBox CubeGrid::cube(long ix, long iy, long iz) const {
    const Vec3 center{origin + (static_cast<double>(ix) + 0.5) * side,
                      origin + (static_cast<double>(iy) + 0.5) * side,
                      origin + (static_cast<double>(iz) + 0.5) * side};
    return OrientedBox::cube(center, side, geom::Role::CubeSmallQ);
}

long RichCubeQuery::rich_count(long r) const {
    long total = 0;
    for (std::size_t k = static_cast<std::size_t>(std::max<long>(r, 0)); k < histogram.size(); ++k) {
        total += histogram[k];
    }
    return total;
}

namespace {

struct Node {
    long ix, iy, iz;  // cell-coordinate origin of this node
    long span;        // node covers span^3 cells
};

}  // namespace

void collect_cells(const OrientedBox& box, const CubeGrid& grid, std::vector<std::uint64_t>& out) {
    // Clip the traversal to the cells overlapping the box AABB, padded by one
    // cell so touching-within-tolerance contacts match the all-cubes scan.
    const geom::Aabb bb = box.aabb();
    const auto clamp_cell = [&](double x, long pad) {
        return std::max<long>(0, std::min<long>(grid.cells - 1,
                                                static_cast<long>(std::floor(
                                                    (x - grid.origin) / grid.side)) +
                                                    pad));
    };
    const long lo[3] = {clamp_cell(bb.lo.x, -1), clamp_cell(bb.lo.y, -1),
                        clamp_cell(bb.lo.z, -1)};
    const long hi[3] = {clamp_cell(bb.hi.x, 1), clamp_cell(bb.hi.y, 1), clamp_cell(bb.hi.z, 1)};

    long span = 1;
    const long extent = std::max({hi[0] - lo[0] + 1, hi[1] - lo[1] + 1, hi[2] - lo[2] + 1});
    while (span < extent) span *= 2;

    std::vector<Node> stack;
    stack.push_back({lo[0], lo[1], lo[2], span});
    while (!stack.empty()) {
        const Node node = stack.back();
        stack.pop_back();
        if (node.ix > hi[0] || node.iy > hi[1] || node.iz > hi[2]) continue;
        if (node.ix + node.span <= lo[0] || node.iy + node.span <= lo[1] ||
            node.iz + node.span <= lo[2]) {
            continue;
        }
        // Geometric extent of the node (clipped to the grid).
        const long ex = std::min(node.ix + node.span, grid.cells) - node.ix;
        const long ey = std::min(node.iy + node.span, grid.cells) - node.iy;
        const long ez = std::min(node.iz + node.span, grid.cells) - node.iz;
        if (ex <= 0 || ey <= 0 || ez <= 0) continue;

        const Vec3 lo_corner{grid.origin + static_cast<double>(node.ix) * grid.side,
                             grid.origin + static_cast<double>(node.iy) * grid.side,
                             grid.origin + static_cast<double>(node.iz) * grid.side};
        const Vec3 ext{static_cast<double>(ex) * grid.side, static_cast<double>(ey) * grid.side,
                       static_cast<double>(ez) * grid.side};
        OrientedBox node_box(lo_corner + ext * 0.5,
                             geom::Mat3::diagonal(ext.x, ext.y, ext.z));
        if (!boxes_intersect(node_box, box)) continue;

        if (node.span == 1) {
            out.push_back(grid.key(node.ix, node.iy, node.iz));
            continue;
        }
        const long h = node.span / 2;
        for (int dx = 0; dx < 2; ++dx)
            for (int dy = 0; dy < 2; ++dy)
                for (int dz = 0; dz < 2; ++dz)
                    stack.push_back({node.ix + dx * h, node.iy + dy * h, node.iz + dz * h, h});
    }
}

RichCubeQuery count_rich_cubes(const std::vector<OrientedBox>& boxes, const CubeGrid& grid) {
    RichCubeQuery q;
    q.grid = grid;

    std::vector<std::uint64_t> keys;
    std::vector<std::uint64_t> scratch;
    for (const auto& b : boxes) {
        scratch.clear();
        collect_cells(b, q.grid, scratch);
        keys.insert(keys.end(), scratch.begin(), scratch.end());
    }
    std::sort(keys.begin(), keys.end());

    int max_count = 0;
    for (std::size_t i = 0; i < keys.size();) {
        std::size_t j = i;
        while (j < keys.size() && keys[j] == keys[i]) ++j;
        const int c = static_cast<int>(j - i);
        q.counts.emplace_back(keys[i], c);
        max_count = std::max(max_count, c);
        i = j;
    }
    q.histogram.assign(static_cast<std::size_t>(max_count) + 1, 0);
    for (const auto& [key, c] : q.counts) {
        (void)key;
        ++q.histogram[static_cast<std::size_t>(c)];
    }
    return q;
}

RichCubeQuery count_rich_cubes(const std::vector<OrientedBox>& boxes, double domain_half,
                               double cube_side) {
    return count_rich_cubes(boxes, CubeGrid::make(domain_half, cube_side));
}

RichCubeQuery count_rich_cubes(const BoxFamily& family, double cube_side) {
    return count_rich_cubes(family.plain_boxes(), family.domain_half(), cube_side);
}

std::vector<int> brute_force_counts(const std::vector<OrientedBox>& boxes, const CubeGrid& grid,
                                    const std::optional<geom::Mat3>& map) {
    std::vector<int> counts(static_cast<std::size_t>(grid.cells * grid.cells * grid.cells), 0);
    for (long ix = 0; ix < grid.cells; ++ix) {
        for (long iy = 0; iy < grid.cells; ++iy) {
            for (long iz = 0; iz < grid.cells; ++iz) {
                OrientedBox cube = grid.cube(ix, iy, iz);
                if (map) cube = cube.linear_image(*map);
                int c = 0;
                for (const auto& b : boxes) {
                    if (boxes_intersect(cube, b)) ++c;
                }
                counts[static_cast<std::size_t>(grid.key(ix, iy, iz))] = c;
            }
        }
    }
    return counts;
}

}  // namespace vinlab::incidence
