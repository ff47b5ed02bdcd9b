#include "explore/frontier.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

#include "explore/errors.hpp"

namespace explore {

namespace {

using Clock = std::chrono::steady_clock;

// List membership bits. A cell can sit on a map list and a frontier list at once.
enum Mark : std::uint8_t {
    kMapOpen = 1 << 0,
    kMapClosed = 1 << 1,
    kFrontierOpen = 1 << 2,
    kFrontierClosed = 1 << 3,
};

std::int64_t squared_distance(CellIndex a, CellIndex b) {
    const std::int64_t dr = a.row - b.row;
    const std::int64_t dc = a.col - b.col;
    return dr * dr + dc * dc;
}

class WavefrontSearch {
public:
    WavefrontSearch(const OccupancyGrid& grid, Connectivity conn)
        : grid_(grid), conn_(conn), marks_(grid.size(), 0) {}

    Detection run(CellIndex pose) {
        Detection out;
        std::deque<CellIndex> map_queue;
        map_queue.push_back(pose);
        mark(pose, kMapOpen);

        while (!map_queue.empty()) {
            const CellIndex p = map_queue.front();
            map_queue.pop_front();
            ++out.stats.cells_visited;

            if (has(p, kMapClosed)) {
                continue;
            }
            if (is_frontier_point_unchecked(grid_, p, conn_)) {
                out.frontiers.push_back(make_frontier(extract_frontier(p, out.stats)));
                for (const CellIndex& c : out.frontiers.back().cells) {
                    mark(c, kMapClosed);
                }
            }
            const bool p_is_reached_open_space = grid_[grid_.index_of(p)] == CellState::Free;
            for_each_neighbor(grid_, p, conn_, [&](CellIndex v) {
                if (has(v, kMapOpen) || has(v, kMapClosed)) {
                    return;
                }
                if (p_is_reached_open_space || borders_reached_open_space(v)) {
                    map_queue.push_back(v);
                    mark(v, kMapOpen);
                }
            });
            mark(p, kMapClosed);
        }
        return out;
    }

private:
    std::vector<CellIndex> extract_frontier(CellIndex seed, DetectionStats& stats) {
        std::vector<CellIndex> cells;
        std::deque<CellIndex> frontier_queue;
        frontier_queue.push_back(seed);
        mark(seed, kFrontierOpen);

        while (!frontier_queue.empty()) {
            const CellIndex q = frontier_queue.front();
            frontier_queue.pop_front();
            ++stats.cells_visited;

            if (has(q, kMapClosed) || has(q, kFrontierClosed)) {
                continue;
            }
            if (is_frontier_point_unchecked(grid_, q, conn_)) {
                cells.push_back(q);
                for_each_neighbor(grid_, q, conn_, [&](CellIndex w) {
                    if (has(w, kFrontierOpen) || has(w, kFrontierClosed) || has(w, kMapClosed)) {
                        return;
                    }
                    frontier_queue.push_back(w);
                    mark(w, kFrontierOpen);
                });
            }
            mark(q, kFrontierClosed);
        }
        return cells;
    }

    // "Has at least one open-space neighbour": a Free neighbour that the outer
    // search has already put on one of its lists.
    bool borders_reached_open_space(CellIndex v) const {
        bool found = false;
        for_each_neighbor(grid_, v, conn_, [&](CellIndex u) {
            if (!found && grid_[grid_.index_of(u)] == CellState::Free &&
                (has(u, kMapOpen) || has(u, kMapClosed))) {
                found = true;
            }
        });
        return found;
    }

    bool has(CellIndex c, Mark m) const { return (marks_[grid_.index_of(c)] & m) != 0; }
    void mark(CellIndex c, Mark m) { marks_[grid_.index_of(c)] |= m; }

    const OccupancyGrid& grid_;
    Connectivity conn_;
    std::vector<std::uint8_t> marks_;
};

}  // namespace

std::string_view to_string(Detector d) {
    return d == Detector::WFD ? "wfd" : "naive";
}

Frontier make_frontier(std::vector<CellIndex> cells) {
    Frontier f;
    f.median = frontier_median(cells);
    f.centroid = frontier_centroid(cells);
    f.cells = std::move(cells);
    return f;
}

Detection wfd(const OccupancyGrid& grid, Pose pose, Connectivity conn) {
    const auto t0 = Clock::now();
    if (grid.at(pose.cell) != CellState::Free) {
        std::ostringstream os;
        os << "wfd: pose " << pose.cell << " is not on known open space";
        throw PreconditionError(os.str());
    }
    Detection out = WavefrontSearch(grid, conn).run(pose.cell);
    out.stats.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0);
    return out;
}

Detection naive_detect(const OccupancyGrid& grid, Connectivity conn, Exec exec) {
    const auto t0 = Clock::now();
    Detection out;
    const std::vector<std::uint8_t> is_point = frontier_mask(grid, conn, exec);
    out.stats.cells_visited = grid.size();

    std::vector<std::uint8_t> grouped(grid.size(), 0);
    std::deque<CellIndex> queue;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!is_point[i] || grouped[i]) {
            continue;
        }
        std::vector<CellIndex> cells;
        grouped[i] = 1;
        queue.push_back(grid.cell_at(i));
        while (!queue.empty()) {
            const CellIndex c = queue.front();
            queue.pop_front();
            cells.push_back(c);
            for_each_neighbor(grid, c, conn, [&](CellIndex n) {
                const std::size_t j = grid.index_of(n);
                if (is_point[j] && !grouped[j]) {
                    grouped[j] = 1;
                    queue.push_back(n);
                }
            });
        }
        out.frontiers.push_back(make_frontier(std::move(cells)));
    }
    out.stats.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0);
    return out;
}

Detection detect(Detector detector, const OccupancyGrid& grid, Pose pose, Connectivity conn) {
    if (detector == Detector::WFD) {
        return wfd(grid, pose, conn);
    }
    return naive_detect(grid, conn);
}

CellIndex frontier_median(std::span<const CellIndex> cells) {
    if (cells.empty()) {
        throw PreconditionError("frontier_median: empty frontier");
    }
    std::vector<int> rows;
    std::vector<int> cols;
    rows.reserve(cells.size());
    cols.reserve(cells.size());
    for (const CellIndex& c : cells) {
        rows.push_back(c.row);
        cols.push_back(c.col);
    }
    const std::size_t mid = (cells.size() - 1) / 2;
    std::nth_element(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(mid), rows.end());
    std::nth_element(cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(mid), cols.end());
    const CellIndex target{rows[mid], cols[mid]};

    CellIndex best = cells.front();
    std::int64_t best_d = std::numeric_limits<std::int64_t>::max();
    for (const CellIndex& c : cells) {
        const std::int64_t d = squared_distance(c, target);
        if (d < best_d || (d == best_d && c < best)) {
            best = c;
            best_d = d;
        }
    }
    return best;
}

Centroid frontier_centroid(std::span<const CellIndex> cells) {
    if (cells.empty()) {
        throw PreconditionError("frontier_centroid: empty frontier");
    }
    double sr = 0.0;
    double sc = 0.0;
    for (const CellIndex& c : cells) {
        sr += c.row;
        sc += c.col;
    }
    const auto n = static_cast<double>(cells.size());
    return {sr / n, sc / n};
}

std::vector<Frontier> rank_frontiers(std::vector<Frontier> frontiers, Pose pose) {
    std::stable_sort(frontiers.begin(), frontiers.end(),
                     [&](const Frontier& a, const Frontier& b) {
                         const std::int64_t da = squared_distance(a.median, pose.cell);
                         const std::int64_t db = squared_distance(b.median, pose.cell);
                         if (da != db) {
                             return da < db;
                         }
                         return a.median < b.median;
                     });
    return frontiers;
}

}  // namespace explore
