#include "gridexplore/mapping.hpp"

#include <cmath>
#include <numbers>

#include "gridexplore/errors.hpp"

namespace gridexplore {

OccupancyGrid::OccupancyGrid(int width, int height, double resolution, double p_known)
    : width_(width), height_(height), resolution_(resolution), p_known_(p_known),
      cells_(static_cast<std::size_t>(width) * height, CellState::Unknown) {
    if (width <= 0 || height <= 0 || resolution <= 0.0)
        throw ShapeError("occupancy grid needs positive dimensions and resolution");
    if (!(p_known > 0.5 && p_known < 1.0))
        throw ShapeError("p_known must lie in (0.5, 1)");
}

double OccupancyGrid::probability(int x, int y) const {
    switch (at(x, y)) {
        case CellState::Unknown: return 0.5;
        case CellState::KnownOccupied: return p_known_;
        case CellState::KnownFree: return 1.0 - p_known_;
    }
    return 0.5;
}

void OccupancyGrid::mark_free(int x, int y) {
    CellState& c = cells_[index(x, y)];
    if (c != CellState::KnownOccupied) c = CellState::KnownFree;
}

void OccupancyGrid::mark_occupied(int x, int y) {
    cells_[index(x, y)] = CellState::KnownOccupied;
}

namespace {

// Walks the cells a ray from the center of (px, py) passes through, in entry
// order. Boundary crossing parameters are computed directly from the cell
// boundaries (not accumulated) so comparisons are bit-stable against an
// analytic intersection test. At an exact corner crossing the walk steps
// diagonally; the two side cells are touched only in a single point and do
// not count as traversed. The callback receives (x, y, t_entry) in cell
// units and returns false to stop.
template <typename Fn>
void walk_ray(int px, int py, double angle, int width, int height, Fn&& visit) {
    const double ox = px + 0.5, oy = py + 0.5;
    const double dx = std::cos(angle), dy = std::sin(angle);
    const int step_x = dx >= 0.0 ? 1 : -1;
    const int step_y = dy >= 0.0 ? 1 : -1;
    int x = px, y = py;

    auto next_tx = [&](int cx) {
        const double boundary = step_x > 0 ? cx + 1 : cx;
        const double t = (boundary - ox) / dx;
        return std::isfinite(t) ? t : std::numeric_limits<double>::infinity();
    };
    auto next_ty = [&](int cy) {
        const double boundary = step_y > 0 ? cy + 1 : cy;
        const double t = (boundary - oy) / dy;
        return std::isfinite(t) ? t : std::numeric_limits<double>::infinity();
    };

    for (;;) {
        const double tx = next_tx(x), ty = next_ty(y);
        double t_entry;
        if (tx < ty) {
            x += step_x;
            t_entry = tx;
        } else if (ty < tx) {
            y += step_y;
            t_entry = ty;
        } else {
            x += step_x;
            y += step_y;
            t_entry = tx;
        }
        if (x < 0 || x >= width || y < 0 || y >= height) return;
        if (!visit(x, y, t_entry)) return;
    }
}

double center_distance_cells(int px, int py, int x, int y) {
    const double dx = x - px, dy = y - py;
    return std::sqrt(dx * dx + dy * dy);
}

}  // namespace

LidarScan raycast(const WorldMap& world, Pose pose, const LidarConfig& cfg) {
    if (cfg.beam_count < 8) throw ShapeError("lidar needs at least 8 beams");
    if (cfg.max_range < 2.0 * world.resolution)
        throw ShapeError("lidar max_range must be at least two cells");
    if (!world.in_bounds(pose.x, pose.y) ||
        world.at(pose.x, pose.y) != WorldCell::Free)
        throw Error("raycast pose must be on a free world cell");

    const double max_range_cells = cfg.max_range / world.resolution;
    LidarScan scan;
    scan.beams.resize(cfg.beam_count);
    for (int k = 0; k < cfg.beam_count; ++k) {
        const double angle =
            cfg.angular_offset + 2.0 * std::numbers::pi * k / cfg.beam_count;
        LidarBeam beam{angle, cfg.max_range, false};
        walk_ray(pose.x, pose.y, angle, world.width, world.height,
                 [&](int x, int y, double t_entry) {
                     if (t_entry >= max_range_cells) return false;
                     if (world.at(x, y) == WorldCell::Occupied) {
                         const double d = center_distance_cells(pose.x, pose.y, x, y);
                         if (d < max_range_cells) {
                             beam.range = d * world.resolution;
                             beam.hit = true;
                         }
                         return false;
                     }
                     return true;
                 });
        scan.beams[k] = beam;
    }
    return scan;
}

void integrate_scan(OccupancyGrid& grid, Pose pose, const LidarScan& scan) {
    const double res = grid.resolution();
    for (const LidarBeam& beam : scan.beams) {
        const double range_cells = beam.range / res;
        walk_ray(pose.x, pose.y, beam.angle, grid.width(), grid.height(),
                 [&](int x, int y, double t_entry) {
                     const double d = center_distance_cells(pose.x, pose.y, x, y);
                     if (beam.hit) {
                         // The hit cell is the unique traversed cell whose
                         // center sits at the reported range.
                         if (std::abs(d - range_cells) < 1e-6) {
                             grid.mark_occupied(x, y);
                             return false;
                         }
                         grid.mark_free(x, y);
                         return true;
                     }
                     // Miss: free space is only certain for cells entered and
                     // centered strictly inside the range.
                     if (t_entry >= range_cells || d >= range_cells) return false;
                     grid.mark_free(x, y);
                     return true;
                 });
    }
}

void sense_at(const WorldMap& world, OccupancyGrid& grid, Pose pose,
              const LidarConfig& cfg) {
    integrate_scan(grid, pose, raycast(world, pose, cfg));
    // The robot observes the cell it occupies.
    grid.mark_free(pose.x, pose.y);
}

double entropy(const OccupancyGrid& grid) {
    std::int64_t unknown = 0;
    for (CellState c : grid.cells())
        if (c == CellState::Unknown) ++unknown;
    const std::int64_t known = static_cast<std::int64_t>(grid.cells().size()) - unknown;
    const double p = grid.p_known();
    const double h_known = -p * std::log(p) - (1.0 - p) * std::log(1.0 - p);
    return static_cast<double>(unknown) * std::numbers::ln2 +
           static_cast<double>(known) * h_known;
}

double explored_region_rate(const OccupancyGrid& grid, const WorldMap& world) {
    if (grid.width() != world.width || grid.height() != world.height)
        throw ShapeError("grid and world dimensions differ");
    int explored = 0;
    for (int y = 0; y < world.height; ++y)
        for (int x = 0; x < world.width; ++x)
            if (grid.at(x, y) == CellState::KnownFree &&
                world.at(x, y) == WorldCell::Free)
                ++explored;
    return static_cast<double>(explored) / free_cell_count(world);
}

}  // namespace gridexplore
