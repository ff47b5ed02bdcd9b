#ifndef EXPLORE_MAP_IO_HPP_
#define EXPLORE_MAP_IO_HPP_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "explore/grid.hpp"
#include "explore/world_map.hpp"

namespace explore {

// ASCII worlds: '#' Occupied, '.' Free, 'R' Free robot start (exactly one).
// Rows are newline separated and must all have the same length.

struct AsciiWorld {
    WorldMap world;
    Pose start;
};

/// Throws ParseError with the 1-based line/column of the first offending character.
AsciiWorld load_ascii_world(std::string_view text);
AsciiWorld load_ascii_world_file(const std::filesystem::path& path);

/// Inverse of load_ascii_world; rows end with '\n'.
std::string format_ascii_world(const WorldMap& world, Pose start);

// PGM pixel values for each cell state.
inline constexpr unsigned char kPgmOccupied = 0;
inline constexpr unsigned char kPgmUnknown = 205;
inline constexpr unsigned char kPgmFree = 254;

/// Binary P5 image, maxval 255, grid row 0 as the top image row.
std::string encode_pgm(const OccupancyGrid& grid);

/// Writes encode_pgm(grid) to `destination`; returns bytes written.
std::size_t save_pgm(const OccupancyGrid& grid, const std::filesystem::path& destination);

/// Accepts only P5 images whose pixels are one of the three encoded values.
OccupancyGrid decode_pgm(std::string_view bytes, double resolution = 0.05);
OccupancyGrid load_pgm(const std::filesystem::path& path, double resolution = 0.05);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

}  // namespace explore

#endif  // EXPLORE_MAP_IO_HPP_
