#include "explore/planner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <functional>
#include <queue>
#include <sstream>
#include <utility>

#include "explore/errors.hpp"

namespace explore {

Costmap::Costmap(int width, int height, std::vector<std::uint8_t> traversable)
    : width_(width), height_(height), traversable_(std::move(traversable)) {
    if (traversable_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
        throw ShapeError("costmap mask size does not match its dimensions");
    }
}

void Costmap::set_traversable(CellIndex c, bool value) {
    if (!contains(c)) {
        std::ostringstream os;
        os << "cell " << c << " outside costmap";
        throw BoundsError(os.str());
    }
    traversable_[index_of(c)] = value ? 1 : 0;
}

Costmap inflate(const OccupancyGrid& grid, double radius, Exec exec) {
    return Costmap(grid.width(), grid.height(), traversable_mask(grid, radius, exec));
}

std::string_view to_string(PlannerAlgorithm a) {
    switch (a) {
        case PlannerAlgorithm::BFS:
            return "bfs";
        case PlannerAlgorithm::Dijkstra:
            return "dijkstra";
        case PlannerAlgorithm::AStar:
            return "astar";
    }
    return "?";
}

namespace {

PathCost add_step(PathCost c, Offset o) {
    if (o.dr != 0 && o.dc != 0) {
        ++c.diagonal;
    } else {
        ++c.straight;
    }
    return c;
}

double heuristic(CellIndex a, CellIndex b, Connectivity conn) {
    const double dr = std::abs(a.row - b.row);
    const double dc = std::abs(a.col - b.col);
    if (conn == Connectivity::Eight) {
        return std::max(dr, dc) + (kSqrt2 - 1.0) * std::min(dr, dc);
    }
    return std::sqrt(dr * dr + dc * dc);
}

void require_start(const Costmap& costmap, CellIndex start) {
    if (!costmap.traversable(start)) {
        std::ostringstream os;
        os << "plan: start " << start << " is not traversable";
        throw PreconditionError(os.str());
    }
}

Path trace_back(int width, const std::vector<std::int32_t>& parent, CellIndex goal) {
    const auto w = static_cast<std::size_t>(width);
    Path path;
    std::size_t i = static_cast<std::size_t>(goal.row) * w + static_cast<std::size_t>(goal.col);
    for (;;) {
        const CellIndex c{static_cast<int>(i / w), static_cast<int>(i % w)};
        path.cells.push_back(c);
        const auto p = static_cast<std::size_t>(parent[i]);
        if (p == i) {
            break;
        }
        i = p;
    }
    std::reverse(path.cells.begin(), path.cells.end());
    for (std::size_t k = 1; k < path.cells.size(); ++k) {
        path.cost = add_step(path.cost, {path.cells[k].row - path.cells[k - 1].row,
                                         path.cells[k].col - path.cells[k - 1].col});
    }
    return path;
}

std::optional<Path> plan_bfs(const Costmap& costmap, CellIndex start, CellIndex goal,
                             Connectivity conn) {
    std::vector<std::int32_t> parent(costmap.mask().size(), -1);
    std::deque<CellIndex> queue{start};
    parent[costmap.index_of(start)] = static_cast<std::int32_t>(costmap.index_of(start));
    while (!queue.empty()) {
        const CellIndex c = queue.front();
        queue.pop_front();
        if (c == goal) {
            return trace_back(costmap.width(), parent, goal);
        }
        for_each_neighbor(costmap.width(), costmap.height(), c, conn, [&](CellIndex n) {
            const std::size_t j = costmap.index_of(n);
            if (parent[j] < 0 && costmap.traversable(n)) {
                parent[j] = static_cast<std::int32_t>(costmap.index_of(c));
                queue.push_back(n);
            }
        });
    }
    return std::nullopt;
}

// Best-first search over step costs. With a zero heuristic this is Dijkstra.
// When `goal` is set the search stops as soon as it is settled.
struct SearchResult {
    std::vector<PathCost> cost;
    std::vector<std::int32_t> parent;
};

SearchResult best_first(const Costmap& costmap, CellIndex start, std::optional<CellIndex> goal,
                        Connectivity conn, const std::function<double(CellIndex)>& h) {
    const std::size_t n = costmap.mask().size();
    SearchResult r{std::vector<PathCost>(n), std::vector<std::int32_t>(n, -1)};
    std::vector<std::uint8_t> settled(n, 0);

    using Entry = std::pair<double, std::size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
    const std::size_t s = costmap.index_of(start);
    r.parent[s] = static_cast<std::int32_t>(s);
    open.emplace(h(start), s);

    while (!open.empty()) {
        const std::size_t i = open.top().second;
        open.pop();
        if (settled[i]) {
            continue;
        }
        settled[i] = 1;
        const CellIndex c{static_cast<int>(i / static_cast<std::size_t>(costmap.width())),
                          static_cast<int>(i % static_cast<std::size_t>(costmap.width()))};
        if (goal && c == *goal) {
            break;
        }
        for (const Offset& o : offsets(conn)) {
            const CellIndex nb{c.row + o.dr, c.col + o.dc};
            if (!costmap.traversable(nb)) {
                continue;
            }
            const std::size_t j = costmap.index_of(nb);
            if (settled[j]) {
                continue;
            }
            const PathCost g = add_step(r.cost[i], o);
            if (r.parent[j] < 0 || g.value() < r.cost[j].value()) {
                r.cost[j] = g;
                r.parent[j] = static_cast<std::int32_t>(i);
                open.emplace(g.value() + h(nb), j);
            }
        }
    }
    return r;
}

}  // namespace

std::optional<Path> plan(const Costmap& costmap, CellIndex start, CellIndex goal,
                         Connectivity conn, PlannerAlgorithm algorithm) {
    require_start(costmap, start);
    if (!costmap.traversable(goal)) {
        return std::nullopt;
    }
    if (algorithm == PlannerAlgorithm::BFS) {
        return plan_bfs(costmap, start, goal, conn);
    }
    std::function<double(CellIndex)> h = [](CellIndex) { return 0.0; };
    if (algorithm == PlannerAlgorithm::AStar) {
        h = [goal, conn](CellIndex c) { return heuristic(c, goal, conn); };
    }
    const SearchResult r = best_first(costmap, start, goal, conn, h);
    if (r.parent[costmap.index_of(goal)] < 0) {
        return std::nullopt;
    }
    return trace_back(costmap.width(), r.parent, goal);
}

CostField::CostField(const Costmap& costmap, CellIndex start, Connectivity conn)
    : width_(costmap.width()), height_(costmap.height()), start_(start) {
    require_start(costmap, start);
    SearchResult r = best_first(costmap, start, std::nullopt, conn, [](CellIndex) { return 0.0; });
    cost_ = std::move(r.cost);
    parent_ = std::move(r.parent);
}

bool CostField::reached(CellIndex c) const noexcept {
    if (c.row < 0 || c.col < 0 || c.row >= height_ || c.col >= width_) {
        return false;
    }
    return parent_[static_cast<std::size_t>(c.row) * static_cast<std::size_t>(width_) +
                   static_cast<std::size_t>(c.col)] >= 0;
}

std::optional<PathCost> CostField::cost(CellIndex c) const {
    if (!reached(c)) {
        return std::nullopt;
    }
    return cost_[static_cast<std::size_t>(c.row) * static_cast<std::size_t>(width_) +
                 static_cast<std::size_t>(c.col)];
}

std::optional<Path> CostField::path_to(CellIndex goal) const {
    if (!reached(goal)) {
        return std::nullopt;
    }
    return trace_back(width_, parent_, goal);
}

std::optional<CellIndex> goal_for_frontier(const CostField& field, const Costmap& costmap,
                                           const OccupancyGrid& belief, const Frontier& f,
                                           Connectivity adjacency) {
    std::optional<CellIndex> best;
    double best_cost = 0.0;
    for_each_neighbor(belief, f.median, adjacency, [&](CellIndex n) {
        if (belief[belief.index_of(n)] != CellState::Free || !costmap.traversable(n)) {
            return;
        }
        const std::optional<PathCost> c = field.cost(n);
        if (!c) {
            return;
        }
        if (!best || c->value() < best_cost) {
            best = n;
            best_cost = c->value();
        }
    });
    return best;
}

std::optional<CellIndex> goal_for_frontier(const Costmap& costmap, const OccupancyGrid& belief,
                                           const Frontier& f, Pose pose, Connectivity adjacency,
                                           Connectivity plan_conn) {
    const CostField field(costmap, pose.cell, plan_conn);
    return goal_for_frontier(field, costmap, belief, f, adjacency);
}

}  // namespace explore
