#ifndef EXPLORE_BENCH_HPP_
#define EXPLORE_BENCH_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "explore/frontier.hpp"
#include "explore/kernels.hpp"
#include "explore/world_map.hpp"
#include "explore/worldgen.hpp"

namespace explore {

// Head-to-head comparison of the two detectors on the same belief.

struct BenchTrial {
    OccupancyGrid belief;
    Pose pose;
    std::optional<WorldMap> world;  // ground truth, when known, for reproduction dumps
};

struct BenchResult {
    int width = 0;
    int height = 0;
    double known_fraction = 0.0;
    std::size_t wfd_cells_visited = 0;
    std::size_t naive_cells_visited = 0;
    double wfd_time_us = 0.0;
    double naive_time_us = 0.0;
    bool agree = false;
};

/// Free cells connected to the pose under `conn` (mask over the grid).
std::vector<std::uint8_t> open_space_component(const OccupancyGrid& belief, Pose pose,
                                               Connectivity conn);

/// Frontiers with at least one cell next to the pose's open-space component.
std::vector<Frontier> reachable_frontiers(const std::vector<Frontier>& frontiers,
                                          const OccupancyGrid& belief, Pose pose,
                                          Connectivity conn);

/// Equal as sets of cell sets (order of frontiers and of cells ignored).
bool same_partition(const std::vector<Frontier>& a, const std::vector<Frontier>& b);

BenchResult run_bench_trial(const BenchTrial& trial, Connectivity conn);

/// `count` partially explored random worlds built from `base`, trial i seeded with
/// base.seed + i. Odd trials get two extra explored patches away from the robot.
/// Trials are generated in parallel when exec is Parallel.
std::vector<BenchTrial> random_bench_trials(const WorldGenParams& base, int count,
                                            std::optional<double> known_fraction, Exec exec);

inline constexpr const char* kBenchHeader =
    "width,height,known_fraction,wfd_cells_visited,naive_cells_visited,wfd_time_us,"
    "naive_time_us";

std::string format_bench_row(const BenchResult& r);

}  // namespace explore

#endif  // EXPLORE_BENCH_HPP_
