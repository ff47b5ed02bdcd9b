#include "explore/world_map.hpp"

#include <deque>
#include <sstream>

#include "explore/errors.hpp"

namespace explore {

WorldMap::WorldMap(int width, int height, double resolution)
    : grid_(width, height, resolution, CellState::Free) {}

WorldMap::WorldMap(OccupancyGrid grid) : grid_(std::move(grid)) {
    if (grid_.count(CellState::Unknown) != 0) {
        throw PreconditionError("ground-truth world may not contain Unknown cells");
    }
}

void WorldMap::set_occupied(CellIndex c, bool occupied) {
    grid_.set(c, occupied ? CellState::Occupied : CellState::Free);
}

double map_agreement(const OccupancyGrid& belief, const WorldMap& truth) {
    return map_agreement(belief, truth.grid());
}

OccupancyGrid reachable_reference(const WorldMap& truth, CellIndex start, Connectivity conn) {
    if (truth.at(start) != CellState::Free) {
        std::ostringstream os;
        os << "start " << start << " is not Free in the world";
        throw PreconditionError(os.str());
    }
    const OccupancyGrid& world = truth.grid();
    OccupancyGrid ref(world.width(), world.height(), world.resolution());
    std::deque<CellIndex> queue{start};
    ref[ref.index_of(start)] = CellState::Free;
    while (!queue.empty()) {
        const CellIndex c = queue.front();
        queue.pop_front();
        for_each_neighbor(world, c, conn, [&](CellIndex n) {
            const std::size_t i = world.index_of(n);
            if (ref[i] != CellState::Unknown) {
                return;
            }
            ref[i] = world[i];
            if (world[i] == CellState::Free) {
                queue.push_back(n);
            }
        });
    }
    return ref;
}

}  // namespace explore
