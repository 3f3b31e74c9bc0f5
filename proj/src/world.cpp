#include "gridexplore/world.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

#include "gridexplore/errors.hpp"
#include "gridexplore/rng.hpp"

namespace gridexplore {

namespace {

// Flood fill over free cells, 8-connected. Returns the number of free cells
// reachable from (sx, sy).
int flood_free(const WorldMap& w, int sx, int sy) {
    std::vector<char> seen(w.cells.size(), 0);
    std::vector<std::pair<int, int>> stack{{sx, sy}};
    seen[w.index(sx, sy)] = 1;
    int count = 0;
    while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        ++count;
        for (int dy = -1; dy <= 1; ++dy) {
            for (int dx = -1; dx <= 1; ++dx) {
                if (dx == 0 && dy == 0) continue;
                const int nx = x + dx, ny = y + dy;
                if (!w.in_bounds(nx, ny)) continue;
                const int ni = w.index(nx, ny);
                if (seen[ni] || w.at(nx, ny) != WorldCell::Free) continue;
                seen[ni] = 1;
                stack.emplace_back(nx, ny);
            }
        }
    }
    return count;
}

struct Region {
    // Inclusive interior rectangle of free cells.
    int x0, y0, x1, y1;
    int w() const { return x1 - x0 + 1; }
    int h() const { return y1 - y0 + 1; }
    int area() const { return w() * h(); }
};

}  // namespace

void validate_world(const WorldMap& world) {
    if (world.width < 3 || world.height < 3)
        throw MapFormatError("map too small: need at least 3x3");
    if (world.resolution <= 0.0)
        throw MapFormatError("resolution must be positive");
    if (static_cast<int>(world.cells.size()) != world.width * world.height)
        throw MapFormatError("cell count does not match dimensions");
    for (int x = 0; x < world.width; ++x) {
        if (world.at(x, 0) != WorldCell::Occupied ||
            world.at(x, world.height - 1) != WorldCell::Occupied)
            throw MapFormatError("open border: top or bottom row has a free cell");
    }
    for (int y = 0; y < world.height; ++y) {
        if (world.at(0, y) != WorldCell::Occupied ||
            world.at(world.width - 1, y) != WorldCell::Occupied)
            throw MapFormatError("open border: left or right column has a free cell");
    }
    int first_free_x = -1, first_free_y = -1, total_free = 0;
    for (int y = 0; y < world.height; ++y) {
        for (int x = 0; x < world.width; ++x) {
            if (world.at(x, y) == WorldCell::Free) {
                if (first_free_x < 0) {
                    first_free_x = x;
                    first_free_y = y;
                }
                ++total_free;
            }
        }
    }
    if (total_free == 0) throw MapFormatError("map has no free cells");
    if (flood_free(world, first_free_x, first_free_y) != total_free)
        throw MapFormatError("free space is disconnected");
}

WorldMap load_world(const std::string& text) {
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header)) throw MapFormatError("empty map file");
    WorldMap w;
    {
        std::istringstream hs(header);
        if (!(hs >> w.width >> w.height >> w.resolution))
            throw MapFormatError("malformed header, expected: width height resolution");
        std::string extra;
        if (hs >> extra) throw MapFormatError("malformed header: trailing tokens");
    }
    if (w.width <= 0 || w.height <= 0 || w.resolution <= 0.0)
        throw MapFormatError("malformed header: non-positive dimension or resolution");
    w.cells.resize(static_cast<std::size_t>(w.width) * w.height);
    for (int y = 0; y < w.height; ++y) {
        std::string row;
        if (!std::getline(in, row)) throw MapFormatError("unexpected end of file");
        if (!row.empty() && row.back() == '\r') row.pop_back();
        if (static_cast<int>(row.size()) != w.width)
            throw MapFormatError("row length does not match header width");
        for (int x = 0; x < w.width; ++x) {
            switch (row[x]) {
                case '#': w.cells[w.index(x, y)] = WorldCell::Occupied; break;
                case '.': w.cells[w.index(x, y)] = WorldCell::Free; break;
                default:
                    throw MapFormatError(std::string("unknown cell character '") +
                                         row[x] + "'");
            }
        }
    }
    validate_world(w);
    return w;
}

std::string save_world(const WorldMap& world) {
    char header[64];
    std::snprintf(header, sizeof(header), "%d %d %.6g\n", world.width,
                  world.height, world.resolution);
    std::string out(header);
    out.reserve(out.size() +
                static_cast<std::size_t>(world.height) * (world.width + 1));
    for (int y = 0; y < world.height; ++y) {
        for (int x = 0; x < world.width; ++x)
            out.push_back(world.at(x, y) == WorldCell::Occupied ? '#' : '.');
        out.push_back('\n');
    }
    return out;
}

int free_cell_count(const WorldMap& world) {
    return static_cast<int>(
        std::count(world.cells.begin(), world.cells.end(), WorldCell::Free));
}

namespace {

// One generation attempt. Splits the interior into rooms by walls with door
// gaps until the target room count is reached. Every accepted split keeps
// the free space 8-connected.
bool try_generate(const MapGenConfig& cfg, Rng& rng, WorldMap& out) {
    WorldMap w;
    w.width = cfg.width;
    w.height = cfg.height;
    w.resolution = cfg.resolution;
    w.cells.assign(static_cast<std::size_t>(w.width) * w.height, WorldCell::Free);
    for (int x = 0; x < w.width; ++x) {
        w.cells[w.index(x, 0)] = WorldCell::Occupied;
        w.cells[w.index(x, w.height - 1)] = WorldCell::Occupied;
    }
    for (int y = 0; y < w.height; ++y) {
        w.cells[w.index(0, y)] = WorldCell::Occupied;
        w.cells[w.index(w.width - 1, y)] = WorldCell::Occupied;
    }

    const int target_rooms = rng.uniform_range(cfg.room_count_min, cfg.room_count_max);
    const int min_extent = std::max(4, cfg.door_width);

    std::vector<Region> rooms{{1, 1, w.width - 2, w.height - 2}};
    int stuck_guard = 0;
    while (static_cast<int>(rooms.size()) < target_rooms) {
        // Largest splittable room first; ties by list order (deterministic).
        int best = -1;
        for (int i = 0; i < static_cast<int>(rooms.size()); ++i) {
            const Region& r = rooms[i];
            const bool splittable =
                r.w() >= 2 * min_extent + 1 || r.h() >= 2 * min_extent + 1;
            if (splittable && (best < 0 || r.area() > rooms[best].area())) best = i;
        }
        if (best < 0) return false;  // nothing left to split
        Region r = rooms[best];

        const bool can_v = r.w() >= 2 * min_extent + 1;
        const bool can_h = r.h() >= 2 * min_extent + 1;
        bool vertical;
        if (can_v && can_h)
            vertical = r.w() > r.h() ? true : (r.h() > r.w() ? false : rng.uniform_int(2) == 0);
        else
            vertical = can_v;

        bool placed = false;
        for (int attempt = 0; attempt < 16 && !placed; ++attempt) {
            if (vertical) {
                const int wall_x = rng.uniform_range(r.x0 + min_extent, r.x1 - min_extent);
                const int door_y0 = rng.uniform_range(r.y0, r.y1 - cfg.door_width + 1);
                for (int y = r.y0; y <= r.y1; ++y) {
                    if (y >= door_y0 && y < door_y0 + cfg.door_width) continue;
                    w.cells[w.index(wall_x, y)] = WorldCell::Occupied;
                }
                if (flood_free(w, r.x0, r.y0) == free_cell_count(w)) {
                    rooms[best] = {r.x0, r.y0, wall_x - 1, r.y1};
                    rooms.push_back({wall_x + 1, r.y0, r.x1, r.y1});
                    placed = true;
                } else {
                    for (int y = r.y0; y <= r.y1; ++y)
                        if (!(y >= door_y0 && y < door_y0 + cfg.door_width))
                            w.cells[w.index(wall_x, y)] = WorldCell::Free;
                }
            } else {
                const int wall_y = rng.uniform_range(r.y0 + min_extent, r.y1 - min_extent);
                const int door_x0 = rng.uniform_range(r.x0, r.x1 - cfg.door_width + 1);
                for (int x = r.x0; x <= r.x1; ++x) {
                    if (x >= door_x0 && x < door_x0 + cfg.door_width) continue;
                    w.cells[w.index(x, wall_y)] = WorldCell::Occupied;
                }
                if (flood_free(w, r.x0, r.y0) == free_cell_count(w)) {
                    rooms[best] = {r.x0, r.y0, r.x1, wall_y - 1};
                    rooms.push_back({r.x0, wall_y + 1, r.x1, r.y1});
                    placed = true;
                } else {
                    for (int x = r.x0; x <= r.x1; ++x)
                        if (!(x >= door_x0 && x < door_x0 + cfg.door_width))
                            w.cells[w.index(x, wall_y)] = WorldCell::Free;
                }
            }
        }
        if (!placed && ++stuck_guard > 8) return false;
    }
    out = std::move(w);
    return true;
}

}  // namespace

WorldMap generate_world(const MapGenConfig& cfg) {
    if (cfg.width < 8 || cfg.height < 8)
        throw MapFormatError("generator requires width and height >= 8");
    if (cfg.resolution <= 0.0) throw MapFormatError("resolution must be positive");
    if (cfg.room_count_min < 1 || cfg.room_count_max < cfg.room_count_min)
        throw MapFormatError("empty room count range");
    if (cfg.door_width < 1) throw MapFormatError("door width must be >= 1");

    constexpr int kMaxRetries = 32;
    for (int retry = 0; retry < kMaxRetries; ++retry) {
        Rng rng(substream_seed(cfg.seed, "map-gen", static_cast<std::uint64_t>(retry)));
        WorldMap w;
        if (try_generate(cfg, rng, w)) {
            validate_world(w);
            return w;
        }
    }
    throw MapFormatError("infeasible map config: rooms do not fit after retries");
}

}  // namespace gridexplore
