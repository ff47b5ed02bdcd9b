#include "explore/world_sim.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "explore/errors.hpp"

namespace explore {

void SensorConfig::validate() const {
    if (!(max_range >= 1.0)) {
        throw PreconditionError("sensor max_range must be at least 1 cell");
    }
    if (ray_count < 4) {
        throw PreconditionError("sensor ray_count must be at least 4");
    }
}

RayResult cast_ray(const WorldMap& world, CellIndex origin, double angle, double max_range) {
    if (!world.contains(origin) || world.occupied(origin)) {
        std::ostringstream os;
        os << "ray origin " << origin << " must be a Free in-bounds world cell";
        throw PreconditionError(os.str());
    }
    const OccupancyGrid& grid = world.grid();
    const int end_row = origin.row + static_cast<int>(std::lround(max_range * std::sin(angle)));
    const int end_col = origin.col + static_cast<int>(std::lround(max_range * std::cos(angle)));
    const double limit_sq = max_range * max_range + 1e-9;

    RayResult out;
    const int dc = std::abs(end_col - origin.col);
    const int dr = -std::abs(end_row - origin.row);
    const int step_c = origin.col < end_col ? 1 : -1;
    const int step_r = origin.row < end_row ? 1 : -1;
    int err = dc + dr;
    CellIndex cur = origin;
    for (;;) {
        if (!grid.contains(cur)) {
            break;
        }
        const double drow = cur.row - origin.row;
        const double dcol = cur.col - origin.col;
        if (drow * drow + dcol * dcol > limit_sq) {
            break;
        }
        if (grid[grid.index_of(cur)] == CellState::Occupied) {
            out.hit = cur;
            break;
        }
        out.traversed.push_back(cur);
        if (cur.row == end_row && cur.col == end_col) {
            break;
        }
        const int e2 = 2 * err;
        if (e2 >= dr) {
            err += dr;
            cur.col += step_c;
        }
        if (e2 <= dc) {
            err += dc;
            cur.row += step_r;
        }
    }
    return out;
}

namespace {

std::size_t reveal(OccupancyGrid& belief, CellIndex c, CellState truth) {
    CellState& cell = belief[belief.index_of(c)];
    if (cell == truth) {
        return 0;
    }
    if (cell != CellState::Unknown) {
        std::ostringstream os;
        os << "belief at " << c << " contradicts the world";
        throw InvariantError(os.str());
    }
    cell = truth;
    return 1;
}

}  // namespace

std::size_t sense(const WorldMap& world, Pose pose, const SensorConfig& cfg,
                  OccupancyGrid& belief) {
    cfg.validate();
    if (world.width() != belief.width() || world.height() != belief.height()) {
        throw ShapeError("belief and world dimensions differ");
    }
    std::size_t revealed = 0;
    for (int k = 0; k < cfg.ray_count; ++k) {
        const double angle = 2.0 * std::numbers::pi * k / cfg.ray_count;
        const RayResult ray = cast_ray(world, pose.cell, angle, cfg.max_range);
        for (const CellIndex& c : ray.traversed) {
            revealed += reveal(belief, c, CellState::Free);
        }
        if (ray.hit) {
            revealed += reveal(belief, *ray.hit, CellState::Occupied);
        }
    }
    return revealed;
}

}  // namespace explore
