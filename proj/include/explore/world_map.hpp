#ifndef EXPLORE_WORLD_MAP_HPP_
#define EXPLORE_WORLD_MAP_HPP_

#include "explore/grid.hpp"

namespace explore {

/// Ground truth: every cell is Free or Occupied. Immutable once handed to the simulator.
class WorldMap {
public:
    WorldMap() = default;
    /// All-Free world.
    WorldMap(int width, int height, double resolution = 0.05);
    /// Throws PreconditionError if `grid` holds any Unknown cell.
    explicit WorldMap(OccupancyGrid grid);

    int width() const noexcept { return grid_.width(); }
    int height() const noexcept { return grid_.height(); }
    bool contains(CellIndex c) const noexcept { return grid_.contains(c); }

    CellState at(CellIndex c) const { return grid_.at(c); }
    bool occupied(CellIndex c) const { return at(c) == CellState::Occupied; }
    void set_occupied(CellIndex c, bool occupied);

    /// The world seen as a fully known belief.
    const OccupancyGrid& grid() const noexcept { return grid_; }

    friend bool operator==(const WorldMap&, const WorldMap&) = default;

private:
    OccupancyGrid grid_;
};

struct Pose {
    CellIndex cell;

    friend bool operator==(const Pose&, const Pose&) = default;
};

double map_agreement(const OccupancyGrid& belief, const WorldMap& truth);

/// The part of `truth` a perfect explorer starting at `start` can map: the Free cells
/// connected to start under `conn`, plus every cell adjacent to them. Everything else
/// is Unknown. Throws PreconditionError if start is not Free.
OccupancyGrid reachable_reference(const WorldMap& truth, CellIndex start, Connectivity conn);

}  // namespace explore

#endif  // EXPLORE_WORLD_MAP_HPP_
