#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gridexplore {

enum class WorldCell : std::uint8_t { Free, Occupied };

// Ground-truth binary grid the robot explores. Row-major, row 0 is the top
// row; x is the column index, y the row index. Immutable after construction.
struct WorldMap {
    int width = 0;
    int height = 0;
    double resolution = 0.05;  // meters per cell
    std::vector<WorldCell> cells;

    int index(int x, int y) const { return y * width + x; }
    bool in_bounds(int x, int y) const {
        return x >= 0 && x < width && y >= 0 && y < height;
    }
    WorldCell at(int x, int y) const { return cells[index(x, y)]; }
};

struct MapGenConfig {
    int width = 64;
    int height = 64;
    double resolution = 0.05;
    int room_count_min = 4;
    int room_count_max = 8;
    int door_width = 4;  // must cover the robot diameter
    std::uint64_t seed = 0;
};

// Parses the ASCII map format: line 1 "width height resolution", then
// height rows of '#'/'.' characters. Throws MapFormatError on malformed
// header, unknown cell characters, open borders or disconnected free space.
WorldMap load_world(const std::string& text);

// Inverse of load_world; load(save(w)) reproduces w exactly.
std::string save_world(const WorldMap& world);

// Room-and-door layout generator: recursive wall placement with door gaps.
// Deterministic in cfg.seed. Throws MapFormatError when the config cannot
// produce the requested room count after bounded retries.
WorldMap generate_world(const MapGenConfig& cfg);

int free_cell_count(const WorldMap& world);

// Checks border closure, 8-connectivity of free space and size minimums.
// Throws MapFormatError naming the violated invariant.
void validate_world(const WorldMap& world);

}  // namespace gridexplore
