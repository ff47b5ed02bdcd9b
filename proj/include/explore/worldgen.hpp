#ifndef EXPLORE_WORLDGEN_HPP_
#define EXPLORE_WORLDGEN_HPP_

#include <cstdint>
#include <random>
#include <string_view>

#include "explore/grid.hpp"
#include "explore/map_io.hpp"
#include "explore/world_map.hpp"

namespace explore {

using Rng = std::mt19937_64;

/// Uniform in [0, 1); identical across standard libraries for a given engine state.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform in [0, n).
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    return rng() % n;
}

struct WorldGenParams {
    int width = 64;
    int height = 64;
    double obstacle_density = 0.2;
    std::uint64_t seed = 1;
};

/// Parses "WxH:DENSITY:SEED", e.g. "64x48:0.25:7". Throws PreconditionError.
WorldGenParams parse_gen_spec(std::string_view spec);

/// Random obstacle field with the start at the centre cell. Obstacles are then
/// carved away until the start's 4-connected free component holds at least
/// `kMinStartComponent` of all free cells. Deterministic per params.
/// Throws PreconditionError unless width, height >= 8 and density in [0, 0.4].
AsciiWorld generate_world(const WorldGenParams& params);

inline constexpr double kMinStartComponent = 0.25;

/// Size of the 4-connected free component containing `start`, over all free cells.
double start_component_fraction(const WorldMap& world, CellIndex start);

/// A belief consistent with `world`: a random blob of explored space grown from
/// `start` until roughly `known_fraction` of the cells are known, plus
/// `extra_patches` smaller explored blobs elsewhere (usually disconnected from the
/// start's). Known cells carry their true state.
OccupancyGrid partial_belief(const WorldMap& world, CellIndex start, double known_fraction,
                             int extra_patches, Rng& rng);

}  // namespace explore

#endif  // EXPLORE_WORLDGEN_HPP_
