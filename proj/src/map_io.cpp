#include "explore/map_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <optional>
#include <vector>

#include "explore/errors.hpp"

namespace explore {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find('\n', begin);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(begin, end - begin);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        lines.push_back(line);
        begin = end + 1;
    }
    while (!lines.empty() && lines.back().empty()) {
        lines.pop_back();
    }
    return lines;
}

}  // namespace

AsciiWorld load_ascii_world(std::string_view text) {
    const std::vector<std::string_view> lines = split_lines(text);
    if (lines.empty()) {
        throw ParseError("empty world", 1, 1);
    }
    const int width = static_cast<int>(lines.front().size());
    const int height = static_cast<int>(lines.size());

    WorldMap world(width, height);
    std::optional<CellIndex> start;
    for (int r = 0; r < height; ++r) {
        const std::string_view line = lines[static_cast<std::size_t>(r)];
        if (static_cast<int>(line.size()) != width) {
            const int col = std::min(static_cast<int>(line.size()), width) + 1;
            throw ParseError("ragged row: expected " + std::to_string(width) + " columns, got " +
                                 std::to_string(line.size()),
                             r + 1, col);
        }
        for (int c = 0; c < width; ++c) {
            switch (line[static_cast<std::size_t>(c)]) {
                case '#':
                    world.set_occupied({r, c}, true);
                    break;
                case '.':
                    break;
                case 'R':
                    if (start) {
                        throw ParseError("duplicate robot start 'R'", r + 1, c + 1);
                    }
                    start = CellIndex{r, c};
                    break;
                default:
                    throw ParseError(std::string("illegal character '") +
                                         line[static_cast<std::size_t>(c)] + "'",
                                     r + 1, c + 1);
            }
        }
    }
    if (!start) {
        throw ParseError("no robot start 'R'", height, width);
    }
    return {std::move(world), Pose{*start}};
}

AsciiWorld load_ascii_world_file(const std::filesystem::path& path) {
    return load_ascii_world(read_file(path));
}

std::string format_ascii_world(const WorldMap& world, Pose start) {
    std::string out;
    out.reserve(static_cast<std::size_t>(world.width() + 1) *
                static_cast<std::size_t>(world.height()));
    for (int r = 0; r < world.height(); ++r) {
        for (int c = 0; c < world.width(); ++c) {
            const CellIndex cell{r, c};
            if (cell == start.cell) {
                out.push_back('R');
            } else {
                out.push_back(world.occupied(cell) ? '#' : '.');
            }
        }
        out.push_back('\n');
    }
    return out;
}

std::string encode_pgm(const OccupancyGrid& grid) {
    std::string out = "P5\n" + std::to_string(grid.width()) + " " +
                      std::to_string(grid.height()) + "\n255\n";
    out.reserve(out.size() + grid.size());
    for (CellState s : grid.cells()) {
        switch (s) {
            case CellState::Occupied:
                out.push_back(static_cast<char>(kPgmOccupied));
                break;
            case CellState::Free:
                out.push_back(static_cast<char>(kPgmFree));
                break;
            case CellState::Unknown:
                out.push_back(static_cast<char>(kPgmUnknown));
                break;
        }
    }
    return out;
}

std::size_t save_pgm(const OccupancyGrid& grid, const std::filesystem::path& destination) {
    const std::string bytes = encode_pgm(grid);
    write_file(destination, bytes);
    return bytes.size();
}

namespace {

class HeaderReader {
public:
    explicit HeaderReader(std::string_view bytes) : bytes_(bytes) {}

    std::string_view token() {
        skip_space_and_comments();
        const std::size_t begin = pos_;
        while (pos_ < bytes_.size() && !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
            ++pos_;
        }
        return bytes_.substr(begin, pos_ - begin);
    }

    int number() {
        const std::string_view t = token();
        if (t.empty()) {
            throw IoError("truncated PGM header");
        }
        int value = 0;
        for (char ch : t) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) {
                throw IoError("bad number in PGM header: " + std::string(t));
            }
            value = value * 10 + (ch - '0');
        }
        return value;
    }

    // Exactly one whitespace byte separates maxval from the raster.
    std::size_t raster_offset() {
        if (pos_ >= bytes_.size() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
            throw IoError("missing whitespace before PGM raster");
        }
        return pos_ + 1;
    }

private:
    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            if (std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
                ++pos_;
            } else if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') {
                    ++pos_;
                }
            } else {
                break;
            }
        }
    }

    std::string_view bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

OccupancyGrid decode_pgm(std::string_view bytes, double resolution) {
    HeaderReader header(bytes);
    if (header.token() != "P5") {
        throw IoError("not a binary (P5) PGM");
    }
    const int width = header.number();
    const int height = header.number();
    const int maxval = header.number();
    if (maxval != 255) {
        throw IoError("unsupported PGM maxval " + std::to_string(maxval));
    }
    const std::size_t offset = header.raster_offset();
    const std::size_t n = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    if (bytes.size() - offset < n) {
        throw IoError("truncated PGM raster");
    }
    OccupancyGrid grid(width, height, resolution);
    for (std::size_t i = 0; i < n; ++i) {
        const auto v = static_cast<unsigned char>(bytes[offset + i]);
        if (v == kPgmOccupied) {
            grid[i] = CellState::Occupied;
        } else if (v == kPgmFree) {
            grid[i] = CellState::Free;
        } else if (v == kPgmUnknown) {
            grid[i] = CellState::Unknown;
        } else {
            throw IoError("pixel value " + std::to_string(v) + " is not a tri-state encoding");
        }
    }
    return grid;
}

OccupancyGrid load_pgm(const std::filesystem::path& path, double resolution) {
    return decode_pgm(read_file(path), resolution);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read " + path.string());
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw IoError("write failed for " + path.string());
    }
}

}  // namespace explore
