#ifndef EXPLORE_GRID_HPP_
#define EXPLORE_GRID_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

namespace explore {

struct CellIndex {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const CellIndex&, const CellIndex&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const CellIndex& c) {
    return os << '(' << c.row << ',' << c.col << ')';
}

enum class CellState : std::uint8_t { Unknown = 0, Free = 1, Occupied = 2 };

enum class Connectivity { Four = 4, Eight = 8 };

struct Offset {
    int dr;
    int dc;
};

// Row-major scan order around the centre cell.
inline constexpr std::array<Offset, 8> kEightOffsets{{
    {-1, -1}, {-1, 0}, {-1, 1}, {0, -1}, {0, 1}, {1, -1}, {1, 0}, {1, 1}}};
inline constexpr std::array<Offset, 4> kFourOffsets{{{-1, 0}, {0, -1}, {0, 1}, {1, 0}}};

inline std::span<const Offset> offsets(Connectivity conn) {
    if (conn == Connectivity::Four) {
        return kFourOffsets;
    }
    return kEightOffsets;
}

/// Dense row-major tri-state occupancy grid. Row 0 is the top row.
class OccupancyGrid {
public:
    OccupancyGrid() = default;
    OccupancyGrid(int width, int height, double resolution = 0.05,
                  CellState fill = CellState::Unknown);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    double resolution() const noexcept { return resolution_; }
    std::size_t size() const noexcept { return cells_.size(); }

    bool contains(CellIndex c) const noexcept {
        return c.row >= 0 && c.col >= 0 && c.row < height_ && c.col < width_;
    }
    std::size_t index_of(CellIndex c) const noexcept {
        return static_cast<std::size_t>(c.row) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(c.col);
    }
    CellIndex cell_at(std::size_t i) const noexcept {
        return {static_cast<int>(i / static_cast<std::size_t>(width_)),
                static_cast<int>(i % static_cast<std::size_t>(width_))};
    }

    /// Throws BoundsError when c is outside the grid.
    CellState at(CellIndex c) const;
    void set(CellIndex c, CellState s);

    CellState operator[](std::size_t i) const noexcept { return cells_[i]; }
    CellState& operator[](std::size_t i) noexcept { return cells_[i]; }

    std::span<const CellState> cells() const noexcept { return cells_; }
    std::span<CellState> cells() noexcept { return cells_; }

    std::size_t count(CellState s) const noexcept;
    std::size_t known_count() const noexcept { return size() - count(CellState::Unknown); }

    friend bool operator==(const OccupancyGrid&, const OccupancyGrid&) = default;

private:
    int width_ = 0;
    int height_ = 0;
    double resolution_ = 0.05;
    std::vector<CellState> cells_;
};

/// Throws BoundsError naming the cell.
void check_bounds(const OccupancyGrid& grid, CellIndex c);

/// Calls fn(CellIndex) for each in-bounds neighbour of c, in row-major order.
template <class Fn>
inline void for_each_neighbor(int width, int height, CellIndex c, Connectivity conn,
                              Fn&& fn) {
    for (const Offset& o : offsets(conn)) {
        const CellIndex n{c.row + o.dr, c.col + o.dc};
        if (n.row >= 0 && n.col >= 0 && n.row < height && n.col < width) {
            fn(n);
        }
    }
}

template <class Fn>
inline void for_each_neighbor(const OccupancyGrid& grid, CellIndex c, Connectivity conn,
                              Fn&& fn) {
    for_each_neighbor(grid.width(), grid.height(), c, conn, std::forward<Fn>(fn));
}

std::vector<CellIndex> neighbors(const OccupancyGrid& grid, CellIndex idx, Connectivity conn);

/// Unknown cell with at least one Free neighbour. Bounds are not checked.
inline bool is_frontier_point_unchecked(const OccupancyGrid& grid, CellIndex c,
                                        Connectivity conn) noexcept {
    if (grid[grid.index_of(c)] != CellState::Unknown) {
        return false;
    }
    for (const Offset& o : offsets(conn)) {
        const CellIndex n{c.row + o.dr, c.col + o.dc};
        if (grid.contains(n) && grid[grid.index_of(n)] == CellState::Free) {
            return true;
        }
    }
    return false;
}

bool is_frontier_point(const OccupancyGrid& grid, CellIndex idx, Connectivity conn);

/// Fraction of known cells in `reference` whose state `belief` reproduces exactly.
/// Unknown reference cells are ignored; an Unknown belief cell is a mismatch.
/// A reference with no known cells scores 1.0.
double map_agreement(const OccupancyGrid& belief, const OccupancyGrid& reference);

}  // namespace explore

#endif  // EXPLORE_GRID_HPP_
