#ifndef EXPLORE_WORLD_SIM_HPP_
#define EXPLORE_WORLD_SIM_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "explore/grid.hpp"
#include "explore/world_map.hpp"

namespace explore {

/// Omnidirectional range sensor. Rays are spaced evenly over a full turn,
/// ray k at angle 2*pi*k/ray_count.
struct SensorConfig {
    double max_range = 10.0;  // cells
    int ray_count = 360;

    /// Throws PreconditionError unless max_range >= 1 and ray_count >= 4.
    void validate() const;
};

struct RayResult {
    std::vector<CellIndex> traversed;  // Free cells, origin first
    std::optional<CellIndex> hit;      // first Occupied cell, if any
};

/// Walks the integer (Bresenham) line from `origin` toward the point at
/// `max_range` along `angle`. Angle 0 points along +col, pi/2 along +row.
/// Stops at the first Occupied cell, the grid border, or the first cell
/// farther than max_range from origin.
RayResult cast_ray(const WorldMap& world, CellIndex origin, double angle, double max_range);

/// One full ray fan from `pose`: traversed cells become Free in `belief`, hit
/// cells Occupied. Returns how many cells changed from Unknown.
std::size_t sense(const WorldMap& world, Pose pose, const SensorConfig& cfg,
                  OccupancyGrid& belief);

}  // namespace explore

#endif  // EXPLORE_WORLD_SIM_HPP_
