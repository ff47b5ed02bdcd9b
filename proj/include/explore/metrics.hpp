#ifndef EXPLORE_METRICS_HPP_
#define EXPLORE_METRICS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "explore/explorer.hpp"

namespace explore {

struct MetricsRow {
    int iteration = 0;
    std::size_t frontiers_found = 0;
    std::size_t cells_known = 0;
    double coverage_pct = 0.0;
    double distance_traveled = 0.0;
    std::size_t detector_cells_visited = 0;
    std::int64_t detector_time_us = 0;
};

inline constexpr const char* kMetricsHeader =
    "iteration,frontiers_found,cells_known,coverage_pct,distance_traveled,"
    "detector_cells_visited,detector_time_us";

std::vector<MetricsRow> metrics_rows(const ExplorationTrace& trace);

/// Header line plus one line per row, '\n' terminated.
std::string format_metrics_csv(const std::vector<MetricsRow>& rows);

}  // namespace explore

#endif  // EXPLORE_METRICS_HPP_
