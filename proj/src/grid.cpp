#include "explore/grid.hpp"

#include <algorithm>
#include <sstream>

#include "explore/errors.hpp"

namespace explore {

OccupancyGrid::OccupancyGrid(int width, int height, double resolution, CellState fill)
    : width_(width), height_(height), resolution_(resolution) {
    if (width < 0 || height < 0) {
        throw ShapeError("grid dimensions must be non-negative");
    }
    if (!(resolution > 0.0)) {
        throw PreconditionError("grid resolution must be positive");
    }
    cells_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
}

CellState OccupancyGrid::at(CellIndex c) const {
    check_bounds(*this, c);
    return cells_[index_of(c)];
}

void OccupancyGrid::set(CellIndex c, CellState s) {
    check_bounds(*this, c);
    cells_[index_of(c)] = s;
}

std::size_t OccupancyGrid::count(CellState s) const noexcept {
    return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), s));
}

void check_bounds(const OccupancyGrid& grid, CellIndex c) {
    if (!grid.contains(c)) {
        std::ostringstream os;
        os << "cell " << c << " outside " << grid.width() << "x" << grid.height() << " grid";
        throw BoundsError(os.str());
    }
}

std::vector<CellIndex> neighbors(const OccupancyGrid& grid, CellIndex idx, Connectivity conn) {
    check_bounds(grid, idx);
    std::vector<CellIndex> out;
    out.reserve(conn == Connectivity::Four ? 4 : 8);
    for_each_neighbor(grid, idx, conn, [&](CellIndex n) { out.push_back(n); });
    return out;
}

bool is_frontier_point(const OccupancyGrid& grid, CellIndex idx, Connectivity conn) {
    check_bounds(grid, idx);
    return is_frontier_point_unchecked(grid, idx, conn);
}

double map_agreement(const OccupancyGrid& belief, const OccupancyGrid& reference) {
    if (belief.width() != reference.width() || belief.height() != reference.height()) {
        std::ostringstream os;
        os << "belief is " << belief.width() << "x" << belief.height() << " but reference is "
           << reference.width() << "x" << reference.height();
        throw ShapeError(os.str());
    }
    std::size_t known = 0;
    std::size_t matched = 0;
    for (std::size_t i = 0; i < reference.size(); ++i) {
        if (reference[i] == CellState::Unknown) {
            continue;
        }
        ++known;
        if (belief[i] == reference[i]) {
            ++matched;
        }
    }
    if (known == 0) {
        return 1.0;
    }
    return static_cast<double>(matched) / static_cast<double>(known);
}

}  // namespace explore
