#include "explore/metrics.hpp"

#include <chrono>
#include <cstdio>

namespace explore {

std::vector<MetricsRow> metrics_rows(const ExplorationTrace& trace) {
    std::vector<MetricsRow> rows;
    rows.reserve(trace.iterations.size());
    for (const IterationRecord& rec : trace.iterations) {
        MetricsRow row;
        row.iteration = rec.iteration;
        row.frontiers_found = rec.frontier_count;
        row.cells_known = rec.cells_known;
        row.coverage_pct = 100.0 * rec.coverage;
        row.distance_traveled = rec.distance_traveled;
        row.detector_cells_visited = rec.detector.cells_visited;
        row.detector_time_us =
            std::chrono::duration_cast<std::chrono::microseconds>(rec.detector.wall_time).count();
        rows.push_back(row);
    }
    return rows;
}

std::string format_metrics_csv(const std::vector<MetricsRow>& rows) {
    std::string out = kMetricsHeader;
    out.push_back('\n');
    char line[256];
    for (const MetricsRow& r : rows) {
        std::snprintf(line, sizeof line, "%d,%zu,%zu,%.4f,%.4f,%zu,%lld\n", r.iteration,
                      r.frontiers_found, r.cells_known, r.coverage_pct, r.distance_traveled,
                      r.detector_cells_visited, static_cast<long long>(r.detector_time_us));
        out += line;
    }
    return out;
}

}  // namespace explore
