#ifndef EXPLORE_CLI_HPP_
#define EXPLORE_CLI_HPP_

#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "explore/frontier.hpp"
#include "explore/grid.hpp"
#include "explore/worldgen.hpp"

namespace explore::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // truncated run or detector disagreement
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct RunArgs {
    std::optional<std::filesystem::path> world_path;
    std::optional<WorldGenParams> gen;
    Detector detector = Detector::WFD;
    double range = 10.0;
    int rays = 360;
    double inflate = 1.0;
    Connectivity conn = Connectivity::Eight;  // frontier adjacency
    Connectivity plan_conn = Connectivity::Four;
    int max_iters = 10000;
    std::optional<int> snapshot_every;
    std::filesystem::path out_dir = ".";
    std::optional<std::filesystem::path> metrics_path;
    int trials = 50;                          // bench only
    std::optional<double> known_fraction;     // bench only

    /// Throws UsageError when both world sources are given.
    void validate() const;
};

/// Runs one exploration; writes final_map.pgm, snapshot_NNNN.pgm and the metrics CSV.
int cmd_explore(const RunArgs& args, std::ostream& out, std::ostream& err);

/// Compares both detectors on recorded snapshots of --world, or on random
/// partially explored grids (--gen, default 512x512:0.1:1).
int cmd_bench(const RunArgs& args, std::ostream& out, std::ostream& err);

/// Writes an ASCII world to `destination`, or to `out` when none is given.
int cmd_genworld(const WorldGenParams& params, const std::optional<std::filesystem::path>& destination,
                 std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to the subcommands.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace explore::cli

#endif  // EXPLORE_CLI_HPP_
