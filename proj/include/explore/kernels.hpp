#ifndef EXPLORE_KERNELS_HPP_
#define EXPLORE_KERNELS_HPP_

#include <cstdint>
#include <vector>

#include "explore/grid.hpp"

namespace explore {

// Whole-grid data-parallel passes. Each kernel has a serial reference and an
// OpenMP variant that must produce identical output; the serial one is what the
// tests and the baseline detector timings use.

enum class Exec { Serial, Parallel };

/// mask[i] == 1 iff cell i is a frontier point.
std::vector<std::uint8_t> frontier_mask_serial(const OccupancyGrid& grid, Connectivity conn);
std::vector<std::uint8_t> frontier_mask_parallel(const OccupancyGrid& grid, Connectivity conn);
std::vector<std::uint8_t> frontier_mask(const OccupancyGrid& grid, Connectivity conn, Exec exec);

/// mask[i] == 1 iff cell i is Free and farther than `radius` (Euclidean) from
/// every Occupied cell. The serial version stamps a disc around each obstacle;
/// the parallel one gathers over the disc around each cell.
std::vector<std::uint8_t> traversable_mask_serial(const OccupancyGrid& grid, double radius);
std::vector<std::uint8_t> traversable_mask_parallel(const OccupancyGrid& grid, double radius);
std::vector<std::uint8_t> traversable_mask(const OccupancyGrid& grid, double radius, Exec exec);

/// Offsets (dr, dc) with dr^2 + dc^2 <= radius^2, row-major.
std::vector<Offset> disc_offsets(double radius);

}  // namespace explore

#endif  // EXPLORE_KERNELS_HPP_
