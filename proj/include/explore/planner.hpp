#ifndef EXPLORE_PLANNER_HPP_
#define EXPLORE_PLANNER_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "explore/frontier.hpp"
#include "explore/grid.hpp"
#include "explore/kernels.hpp"

namespace explore {

inline constexpr double kSqrt2 = 1.41421356237309504880;

/// Plannable cells of a belief grid.
class Costmap {
public:
    Costmap() = default;
    Costmap(int width, int height, std::vector<std::uint8_t> traversable);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    bool contains(CellIndex c) const noexcept {
        return c.row >= 0 && c.col >= 0 && c.row < height_ && c.col < width_;
    }
    std::size_t index_of(CellIndex c) const noexcept {
        return static_cast<std::size_t>(c.row) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(c.col);
    }

    /// False outside the map.
    bool traversable(CellIndex c) const noexcept {
        return contains(c) && traversable_[index_of(c)] != 0;
    }
    void set_traversable(CellIndex c, bool value);

    const std::vector<std::uint8_t>& mask() const noexcept { return traversable_; }

    friend bool operator==(const Costmap&, const Costmap&) = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> traversable_;
};

/// Unknown and Occupied cells, and Free cells within `radius` of an obstacle,
/// become non-traversable.
Costmap inflate(const OccupancyGrid& grid, double radius, Exec exec = Exec::Parallel);

/// Accumulated step counts; the cost is straight + diagonal * sqrt(2).
struct PathCost {
    int straight = 0;
    int diagonal = 0;

    double value() const noexcept { return straight + diagonal * kSqrt2; }
    int hops() const noexcept { return straight + diagonal; }

    friend bool operator==(const PathCost&, const PathCost&) = default;
};

struct Path {
    std::vector<CellIndex> cells;  // start first, goal last
    PathCost cost;

    double length() const noexcept { return cost.value(); }
};

enum class PlannerAlgorithm { BFS, Dijkstra, AStar };

std::string_view to_string(PlannerAlgorithm a);

/// Shortest traversable path. BFS minimises hop count; Dijkstra and A* minimise
/// length with unit straight and sqrt(2) diagonal steps. Returns nullopt when the
/// goal is non-traversable or unreachable. Throws PreconditionError when start is
/// not traversable.
std::optional<Path> plan(const Costmap& costmap, CellIndex start, CellIndex goal,
                         Connectivity conn, PlannerAlgorithm algorithm);

/// Single-source shortest-path tree (Dijkstra) over the whole costmap.
class CostField {
public:
    CostField(const Costmap& costmap, CellIndex start, Connectivity conn);

    CellIndex start() const noexcept { return start_; }
    bool reached(CellIndex c) const noexcept;
    /// nullopt when c is unreachable.
    std::optional<PathCost> cost(CellIndex c) const;
    std::optional<Path> path_to(CellIndex goal) const;

private:
    int width_;
    int height_;
    CellIndex start_;
    std::vector<PathCost> cost_;
    std::vector<std::int32_t> parent_;  // -1: unreached, self: start
};

/// The traversable Free neighbour of the frontier median (under `adjacency`) with the
/// lowest planned cost from the pose; ties go to the first in row-major order.
std::optional<CellIndex> goal_for_frontier(const Costmap& costmap, const OccupancyGrid& belief,
                                           const Frontier& f, Pose pose, Connectivity adjacency,
                                           Connectivity plan_conn = Connectivity::Four);

/// Same selection with a precomputed cost field rooted at the pose.
std::optional<CellIndex> goal_for_frontier(const CostField& field, const Costmap& costmap,
                                           const OccupancyGrid& belief, const Frontier& f,
                                           Connectivity adjacency);

}  // namespace explore

#endif  // EXPLORE_PLANNER_HPP_
