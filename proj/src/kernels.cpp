#include "explore/kernels.hpp"

#include <cmath>

#include "explore/errors.hpp"

namespace explore {

std::vector<std::uint8_t> frontier_mask_serial(const OccupancyGrid& grid, Connectivity conn) {
    std::vector<std::uint8_t> mask(grid.size(), 0);
    for (int r = 0; r < grid.height(); ++r) {
        for (int c = 0; c < grid.width(); ++c) {
            const CellIndex cell{r, c};
            mask[grid.index_of(cell)] = is_frontier_point_unchecked(grid, cell, conn) ? 1 : 0;
        }
    }
    return mask;
}

std::vector<std::uint8_t> frontier_mask_parallel(const OccupancyGrid& grid, Connectivity conn) {
    std::vector<std::uint8_t> mask(grid.size(), 0);
    const int height = grid.height();
    const int width = grid.width();
#pragma omp parallel for schedule(static)
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            const CellIndex cell{r, c};
            mask[grid.index_of(cell)] = is_frontier_point_unchecked(grid, cell, conn) ? 1 : 0;
        }
    }
    return mask;
}

std::vector<std::uint8_t> frontier_mask(const OccupancyGrid& grid, Connectivity conn, Exec exec) {
    return exec == Exec::Parallel ? frontier_mask_parallel(grid, conn)
                                  : frontier_mask_serial(grid, conn);
}

std::vector<Offset> disc_offsets(double radius) {
    if (!(radius >= 0.0)) {
        throw PreconditionError("inflation radius must be non-negative");
    }
    const int reach = static_cast<int>(std::floor(radius));
    const double limit = radius * radius + 1e-9;
    std::vector<Offset> out;
    for (int dr = -reach; dr <= reach; ++dr) {
        for (int dc = -reach; dc <= reach; ++dc) {
            if (static_cast<double>(dr * dr + dc * dc) <= limit) {
                out.push_back({dr, dc});
            }
        }
    }
    return out;
}

std::vector<std::uint8_t> traversable_mask_serial(const OccupancyGrid& grid, double radius) {
    const std::vector<Offset> disc = disc_offsets(radius);
    std::vector<std::uint8_t> mask(grid.size(), 0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        mask[i] = grid[i] == CellState::Free ? 1 : 0;
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] != CellState::Occupied) {
            continue;
        }
        const CellIndex obstacle = grid.cell_at(i);
        for (const Offset& o : disc) {
            const CellIndex n{obstacle.row + o.dr, obstacle.col + o.dc};
            if (grid.contains(n)) {
                mask[grid.index_of(n)] = 0;
            }
        }
    }
    return mask;
}

std::vector<std::uint8_t> traversable_mask_parallel(const OccupancyGrid& grid, double radius) {
    const std::vector<Offset> disc = disc_offsets(radius);
    std::vector<std::uint8_t> mask(grid.size(), 0);
    const int height = grid.height();
    const int width = grid.width();
#pragma omp parallel for schedule(static)
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            const CellIndex cell{r, c};
            if (grid[grid.index_of(cell)] != CellState::Free) {
                continue;
            }
            bool clear = true;
            for (const Offset& o : disc) {
                const CellIndex n{r + o.dr, c + o.dc};
                if (grid.contains(n) && grid[grid.index_of(n)] == CellState::Occupied) {
                    clear = false;
                    break;
                }
            }
            mask[grid.index_of(cell)] = clear ? 1 : 0;
        }
    }
    return mask;
}

std::vector<std::uint8_t> traversable_mask(const OccupancyGrid& grid, double radius, Exec exec) {
    return exec == Exec::Parallel ? traversable_mask_parallel(grid, radius)
                                  : traversable_mask_serial(grid, radius);
}

}  // namespace explore
