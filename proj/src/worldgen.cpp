#include "explore/worldgen.hpp"

#include <charconv>
#include <deque>
#include <string>
#include <vector>

#include "explore/errors.hpp"

namespace explore {

namespace {

template <class T>
T parse_number(std::string_view text, std::string_view what) {
    T value{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw PreconditionError("bad " + std::string(what) + " '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::uint8_t> component_of(const WorldMap& world, CellIndex start) {
    const OccupancyGrid& g = world.grid();
    std::vector<std::uint8_t> in(g.size(), 0);
    std::deque<CellIndex> queue{start};
    in[g.index_of(start)] = 1;
    while (!queue.empty()) {
        const CellIndex c = queue.front();
        queue.pop_front();
        for_each_neighbor(g, c, Connectivity::Four, [&](CellIndex n) {
            const std::size_t j = g.index_of(n);
            if (!in[j] && g[j] == CellState::Free) {
                in[j] = 1;
                queue.push_back(n);
            }
        });
    }
    return in;
}

// Clears the obstacles on a shortest 4-connected route from the component to the
// nearest free cell outside it. Returns false if there is no such cell.
bool carve_to_nearest(WorldMap& world, const std::vector<std::uint8_t>& in_component) {
    const OccupancyGrid& g = world.grid();
    std::vector<std::int64_t> parent(g.size(), -1);
    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (in_component[i]) {
            parent[i] = static_cast<std::int64_t>(i);
            queue.push_back(i);
        }
    }
    while (!queue.empty()) {
        const std::size_t i = queue.front();
        queue.pop_front();
        if (!in_component[i] && g[i] == CellState::Free) {
            for (std::size_t k = i; !in_component[k]; k = static_cast<std::size_t>(parent[k])) {
                world.set_occupied(g.cell_at(k), false);
            }
            return true;
        }
        for_each_neighbor(g, g.cell_at(i), Connectivity::Four, [&](CellIndex n) {
            const std::size_t j = g.index_of(n);
            if (parent[j] < 0) {
                parent[j] = static_cast<std::int64_t>(i);
                queue.push_back(j);
            }
        });
    }
    return false;
}

}  // namespace

WorldGenParams parse_gen_spec(std::string_view spec) {
    const std::size_t x = spec.find('x');
    const std::size_t c1 = spec.find(':');
    const std::size_t c2 = c1 == std::string_view::npos ? c1 : spec.find(':', c1 + 1);
    if (x == std::string_view::npos || c1 == std::string_view::npos ||
        c2 == std::string_view::npos || x > c1) {
        throw PreconditionError("expected WxH:DENSITY:SEED, got '" + std::string(spec) + "'");
    }
    WorldGenParams p;
    p.width = parse_number<int>(spec.substr(0, x), "width");
    p.height = parse_number<int>(spec.substr(x + 1, c1 - x - 1), "height");
    p.obstacle_density = parse_number<double>(spec.substr(c1 + 1, c2 - c1 - 1), "density");
    p.seed = parse_number<std::uint64_t>(spec.substr(c2 + 1), "seed");
    return p;
}

double start_component_fraction(const WorldMap& world, CellIndex start) {
    const std::vector<std::uint8_t> in = component_of(world, start);
    std::size_t members = 0;
    for (std::uint8_t v : in) {
        members += v;
    }
    const std::size_t free_cells = world.grid().count(CellState::Free);
    return free_cells == 0 ? 0.0 : static_cast<double>(members) / static_cast<double>(free_cells);
}

AsciiWorld generate_world(const WorldGenParams& params) {
    if (params.width < 8 || params.height < 8) {
        throw PreconditionError("generated worlds must be at least 8x8");
    }
    if (!(params.obstacle_density >= 0.0 && params.obstacle_density <= 0.4)) {
        throw PreconditionError("obstacle density must lie in [0, 0.4]");
    }
    Rng rng(params.seed);
    WorldMap world(params.width, params.height);
    for (int r = 0; r < params.height; ++r) {
        for (int c = 0; c < params.width; ++c) {
            if (uniform01(rng) < params.obstacle_density) {
                world.set_occupied({r, c}, true);
            }
        }
    }
    const CellIndex start{params.height / 2, params.width / 2};
    world.set_occupied(start, false);

    for (;;) {
        const std::vector<std::uint8_t> in = component_of(world, start);
        std::size_t members = 0;
        for (std::uint8_t v : in) {
            members += v;
        }
        const auto free_cells = static_cast<double>(world.grid().count(CellState::Free));
        if (static_cast<double>(members) >= kMinStartComponent * free_cells) {
            break;
        }
        if (!carve_to_nearest(world, in)) {
            break;
        }
    }
    return {std::move(world), Pose{start}};
}

namespace {

class BlobGrower {
public:
    BlobGrower(const WorldMap& world, OccupancyGrid& belief, Rng& rng)
        : world_(world), belief_(belief), rng_(rng), queued_(belief.size(), 0) {}

    void grow(CellIndex seed, std::size_t target_known, std::size_t& known) {
        std::vector<CellIndex> open;
        reveal_around(seed, open, known);
        while (known < target_known && !open.empty()) {
            const std::size_t k = uniform_below(rng_, open.size());
            const CellIndex c = open[k];
            open[k] = open.back();
            open.pop_back();
            reveal_around(c, open, known);
        }
    }

private:
    void reveal_around(CellIndex c, std::vector<CellIndex>& open, std::size_t& known) {
        reveal(c, open, known);
        for_each_neighbor(belief_, c, Connectivity::Eight,
                          [&](CellIndex n) { reveal(n, open, known); });
    }

    void reveal(CellIndex c, std::vector<CellIndex>& open, std::size_t& known) {
        const std::size_t i = belief_.index_of(c);
        if (belief_[i] == CellState::Unknown) {
            belief_[i] = world_.grid()[i];
            ++known;
        }
        if (belief_[i] == CellState::Free && !queued_[i]) {
            queued_[i] = 1;
            open.push_back(c);
        }
    }

    const WorldMap& world_;
    OccupancyGrid& belief_;
    Rng& rng_;
    std::vector<std::uint8_t> queued_;
};

bool isolated_free(const WorldMap& world, const OccupancyGrid& belief, CellIndex c) {
    if (world.occupied(c)) {
        return false;
    }
    for (int dr = -2; dr <= 2; ++dr) {
        for (int dc = -2; dc <= 2; ++dc) {
            const CellIndex n{c.row + dr, c.col + dc};
            if (belief.contains(n) && belief[belief.index_of(n)] != CellState::Unknown) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

OccupancyGrid partial_belief(const WorldMap& world, CellIndex start, double known_fraction,
                             int extra_patches, Rng& rng) {
    if (world.occupied(start)) {
        throw PreconditionError("partial_belief: start must be free");
    }
    OccupancyGrid belief(world.width(), world.height(), world.grid().resolution());
    const auto total = static_cast<double>(belief.size());
    const double patch_share = extra_patches > 0 ? 0.1 : 0.0;
    std::size_t known = 0;
    BlobGrower grower(world, belief, rng);
    grower.grow(start, static_cast<std::size_t>(known_fraction * (1.0 - patch_share * extra_patches) * total),
                known);
    for (int p = 0; p < extra_patches; ++p) {
        for (int attempt = 0; attempt < 200; ++attempt) {
            const CellIndex seed{static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(world.height()))),
                                 static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(world.width())))};
            if (isolated_free(world, belief, seed)) {
                grower.grow(seed, known + static_cast<std::size_t>(known_fraction * patch_share * total),
                            known);
                break;
            }
        }
    }
    return belief;
}

}  // namespace explore
