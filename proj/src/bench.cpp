#include "explore/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <deque>

namespace explore {

std::vector<std::uint8_t> open_space_component(const OccupancyGrid& belief, Pose pose,
                                               Connectivity conn) {
    std::vector<std::uint8_t> in(belief.size(), 0);
    if (belief.at(pose.cell) != CellState::Free) {
        return in;
    }
    std::deque<CellIndex> queue{pose.cell};
    in[belief.index_of(pose.cell)] = 1;
    while (!queue.empty()) {
        const CellIndex c = queue.front();
        queue.pop_front();
        for_each_neighbor(belief, c, conn, [&](CellIndex n) {
            const std::size_t j = belief.index_of(n);
            if (!in[j] && belief[j] == CellState::Free) {
                in[j] = 1;
                queue.push_back(n);
            }
        });
    }
    return in;
}

std::vector<Frontier> reachable_frontiers(const std::vector<Frontier>& frontiers,
                                          const OccupancyGrid& belief, Pose pose,
                                          Connectivity conn) {
    const std::vector<std::uint8_t> in = open_space_component(belief, pose, conn);
    std::vector<Frontier> out;
    for (const Frontier& f : frontiers) {
        const bool touches = std::any_of(f.cells.begin(), f.cells.end(), [&](CellIndex c) {
            bool adjacent = false;
            for_each_neighbor(belief, c, conn,
                              [&](CellIndex n) { adjacent = adjacent || in[belief.index_of(n)]; });
            return adjacent;
        });
        if (touches) {
            out.push_back(f);
        }
    }
    return out;
}

bool same_partition(const std::vector<Frontier>& a, const std::vector<Frontier>& b) {
    if (a.size() != b.size()) {
        return false;
    }
    auto canonical = [](const std::vector<Frontier>& fs) {
        std::vector<std::vector<CellIndex>> sets;
        sets.reserve(fs.size());
        for (const Frontier& f : fs) {
            std::vector<CellIndex> cells = f.cells;
            std::sort(cells.begin(), cells.end());
            sets.push_back(std::move(cells));
        }
        std::sort(sets.begin(), sets.end());
        return sets;
    };
    return canonical(a) == canonical(b);
}

BenchResult run_bench_trial(const BenchTrial& trial, Connectivity conn) {
    using us = std::chrono::duration<double, std::micro>;
    const Detection w = wfd(trial.belief, trial.pose, conn);
    const Detection n = naive_detect(trial.belief, conn, Exec::Serial);

    BenchResult r;
    r.width = trial.belief.width();
    r.height = trial.belief.height();
    r.known_fraction = static_cast<double>(trial.belief.known_count()) /
                       static_cast<double>(trial.belief.size());
    r.wfd_cells_visited = w.stats.cells_visited;
    r.naive_cells_visited = n.stats.cells_visited;
    r.wfd_time_us = std::chrono::duration_cast<us>(w.stats.wall_time).count();
    r.naive_time_us = std::chrono::duration_cast<us>(n.stats.wall_time).count();
    r.agree = same_partition(w.frontiers,
                             reachable_frontiers(n.frontiers, trial.belief, trial.pose, conn));
    return r;
}

std::vector<BenchTrial> random_bench_trials(const WorldGenParams& base, int count,
                                            std::optional<double> known_fraction, Exec exec) {
    static constexpr double kSweep[] = {0.02, 0.05, 0.10};
    std::vector<BenchTrial> trials(static_cast<std::size_t>(std::max(count, 0)));
    const auto make = [&](int i) {
        WorldGenParams p = base;
        p.seed = base.seed + static_cast<std::uint64_t>(i);
        AsciiWorld w = generate_world(p);
        Rng rng(p.seed ^ 0x9e3779b97f4a7c15ULL);
        const double known = known_fraction ? *known_fraction : kSweep[i % 3];
        OccupancyGrid belief = partial_belief(w.world, w.start.cell, known, i % 2 == 1 ? 2 : 0, rng);
        trials[static_cast<std::size_t>(i)] = BenchTrial{std::move(belief), w.start, std::move(w.world)};
    };
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < count; ++i) {
            make(i);
        }
    } else {
        for (int i = 0; i < count; ++i) {
            make(i);
        }
    }
    return trials;
}

std::string format_bench_row(const BenchResult& r) {
    char line[256];
    std::snprintf(line, sizeof line, "%d,%d,%.4f,%zu,%zu,%.3f,%.3f", r.width, r.height,
                  r.known_fraction, r.wfd_cells_visited, r.naive_cells_visited, r.wfd_time_us,
                  r.naive_time_us);
    return line;
}

}  // namespace explore
