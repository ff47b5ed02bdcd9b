#ifndef EXPLORE_FRONTIER_HPP_
#define EXPLORE_FRONTIER_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "explore/grid.hpp"
#include "explore/kernels.hpp"
#include "explore/world_map.hpp"

namespace explore {

struct Centroid {
    double row = 0.0;
    double col = 0.0;

    friend bool operator==(const Centroid&, const Centroid&) = default;
};

/// One connected set of frontier points.
struct Frontier {
    std::vector<CellIndex> cells;  // detection order
    CellIndex median;              // always a member of cells
    Centroid centroid;             // may lie off the frontier
};

struct DetectionStats {
    std::size_t cells_visited = 0;
    std::chrono::nanoseconds wall_time{0};
};

struct Detection {
    std::vector<Frontier> frontiers;
    DetectionStats stats;
};

enum class Detector { WFD, Naive };

std::string_view to_string(Detector d);

/// Builds a Frontier (median and centroid filled in). Throws PreconditionError on empty input.
Frontier make_frontier(std::vector<CellIndex> cells);

/// Wavefront Frontier Detector.
///
/// Outer BFS from the pose through cells adjacent to open space already reached by
/// the outer search; each frontier point it dequeues seeds an inner BFS that
/// extracts the whole connected frontier, after which the frontier is sealed so no
/// point joins two frontiers. Only the known region around the robot and its fringe
/// are touched. Per-cell list membership (map open/closed, frontier open/closed) is
/// kept in a fresh side array each call.
///
/// Throws PreconditionError unless the pose cell is Free; BoundsError if outside.
Detection wfd(const OccupancyGrid& grid, Pose pose, Connectivity conn);

/// Full-grid baseline: classify every cell, then group frontier points into
/// connected components in row-major seed order. cells_visited is always width*height.
Detection naive_detect(const OccupancyGrid& grid, Connectivity conn, Exec exec = Exec::Serial);

/// Runs the chosen detector. The pose is ignored by the naive detector.
Detection detect(Detector detector, const OccupancyGrid& grid, Pose pose, Connectivity conn);

/// Member cell nearest the component-wise (lower) median of the coordinates;
/// ties go to the lexicographically smallest (row, col).
CellIndex frontier_median(std::span<const CellIndex> cells);
inline CellIndex frontier_median(const Frontier& f) { return frontier_median(f.cells); }

Centroid frontier_centroid(std::span<const CellIndex> cells);
inline Centroid frontier_centroid(const Frontier& f) { return frontier_centroid(f.cells); }

/// Sorted by Euclidean distance from the pose to each median, then by median.
std::vector<Frontier> rank_frontiers(std::vector<Frontier> frontiers, Pose pose);

}  // namespace explore

#endif  // EXPLORE_FRONTIER_HPP_
