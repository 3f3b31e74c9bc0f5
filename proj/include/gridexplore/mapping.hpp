#pragma once

#include <cstdint>
#include <vector>

#include "gridexplore/world.hpp"

namespace gridexplore {

// Grid cell occupied by the robot. The base is omnidirectional, so no
// heading is stored.
struct Pose {
    int x = 0;
    int y = 0;
    friend bool operator==(const Pose&, const Pose&) = default;
};

struct LidarConfig {
    int beam_count = 72;
    double max_range = 3.5;       // meters
    double angular_offset = 0.0;  // radians
};

struct LidarBeam {
    double angle = 0.0;
    double range = 0.0;  // meters; equals max_range when hit is false
    bool hit = false;
};

struct LidarScan {
    std::vector<LidarBeam> beams;
};

enum class CellState : std::uint8_t { Unknown, KnownFree, KnownOccupied };

// Belief map. Cells only transition Unknown -> Known; KnownOccupied may
// override KnownFree but never the reverse (occupancy is sticky).
class OccupancyGrid {
  public:
    OccupancyGrid() = default;
    OccupancyGrid(int width, int height, double resolution, double p_known = 0.999);

    int width() const { return width_; }
    int height() const { return height_; }
    double resolution() const { return resolution_; }
    double p_known() const { return p_known_; }

    int index(int x, int y) const { return y * width_ + x; }
    bool in_bounds(int x, int y) const {
        return x >= 0 && x < width_ && y >= 0 && y < height_;
    }
    CellState at(int x, int y) const { return cells_[index(x, y)]; }
    CellState at_index(int i) const { return cells_[i]; }
    const std::vector<CellState>& cells() const { return cells_; }

    // Occupancy probability of a cell: Unknown 0.5, KnownOccupied p_known,
    // KnownFree 1 - p_known.
    double probability(int x, int y) const;

    void mark_free(int x, int y);      // no-op on KnownOccupied cells
    void mark_occupied(int x, int y);  // overrides KnownFree

  private:
    int width_ = 0;
    int height_ = 0;
    double resolution_ = 0.05;
    double p_known_ = 0.999;
    std::vector<CellState> cells_;
};

// Simulates one deterministic, noise-free 360 degree scan from a free world
// cell. Beams leave the cell center at angles angular_offset + 2*pi*k/n and
// stop at the first occupied cell whose center lies strictly inside
// max_range; otherwise they report max_range with hit=false.
LidarScan raycast(const WorldMap& world, Pose pose, const LidarConfig& cfg);

// Writes a scan taken at pose into the grid: cells strictly between pose and
// each beam endpoint become KnownFree, hit endpoint cells become
// KnownOccupied. Idempotent for identical (pose, scan).
void integrate_scan(OccupancyGrid& grid, Pose pose, const LidarScan& scan);

// raycast + integrate_scan + marking the robot's own cell KnownFree (the
// robot observes the cell it stands on).
void sense_at(const WorldMap& world, OccupancyGrid& grid, Pose pose,
              const LidarConfig& cfg);

// Map entropy in nats: sum over cells of the Bernoulli entropy
// -p ln p - (1-p) ln(1-p) of the cell's occupancy probability.
double entropy(const OccupancyGrid& grid);

// Fraction of ground-truth free cells currently marked KnownFree.
double explored_region_rate(const OccupancyGrid& grid, const WorldMap& world);

}  // namespace gridexplore
