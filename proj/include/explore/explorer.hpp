#ifndef EXPLORE_EXPLORER_HPP_
#define EXPLORE_EXPLORER_HPP_

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "explore/frontier.hpp"
#include "explore/grid.hpp"
#include "explore/planner.hpp"
#include "explore/world_map.hpp"
#include "explore/world_sim.hpp"

namespace explore {

struct ExplorerConfig {
    Detector detector = Detector::WFD;
    SensorConfig sensor;
    double inflation_radius = 1.0;
    Connectivity frontier_conn = Connectivity::Eight;
    Connectivity plan_conn = Connectivity::Four;
    PlannerAlgorithm planner = PlannerAlgorithm::AStar;
    bool sense_while_moving = true;
    int max_iterations = 10000;
    std::optional<int> snapshot_every;

    void validate() const;
};

enum class EventKind { MovedTo, RecoveryTriggered, Complete };

std::string_view to_string(EventKind k);

struct Event {
    EventKind kind = EventKind::Complete;
    std::optional<CellIndex> goal;
};

/// Medians of frontiers found inaccessible, each tagged with how many cells were
/// known when planning failed. An entry expires as soon as more of the map is known.
class Blacklist {
public:
    struct Entry {
        CellIndex median;
        std::size_t known_cells;
    };

    void add(CellIndex median, std::size_t known_cells);
    bool contains(CellIndex median) const;
    /// Drops entries recorded with fewer known cells than `known_cells`.
    void invalidate(std::size_t known_cells);

    bool empty() const noexcept { return entries_.empty(); }
    std::size_t size() const noexcept { return entries_.size(); }
    const std::vector<Entry>& entries() const noexcept { return entries_; }

private:
    std::vector<Entry> entries_;
};

struct IterationRecord {
    int iteration = 0;
    EventKind event = EventKind::Complete;
    std::size_t frontier_count = 0;  // as detected, before blacklist filtering
    std::optional<CellIndex> goal;
    double path_cost = 0.0;
    std::size_t newly_revealed = 0;
    DetectionStats detector;
    double coverage = 0.0;  // agreement with the reachable ground truth
    std::size_t cells_known = 0;
    double distance_traveled = 0.0;  // cumulative
    std::size_t blacklisted = 0;
};

enum class Termination { Complete, MaxIterations };

std::string_view to_string(Termination t);

struct ExplorationTrace {
    std::size_t initial_revealed = 0;
    std::vector<IterationRecord> iterations;
    double distance_traveled = 0.0;
    int iteration_count = 0;
    std::chrono::nanoseconds wall_time{0};
    Termination termination = Termination::MaxIterations;
};

/// What the loop saw when it gave up on a frontier.
struct BlacklistEvidence {
    const Frontier& frontier;
    const OccupancyGrid& belief;
    const Costmap& costmap;
    Pose pose;
};

struct ExplorerObserver {
    std::function<void(int iteration, const OccupancyGrid& belief, Pose pose)> on_snapshot;
    std::function<void(const BlacklistEvidence&)> on_blacklist;
};

/// Single-robot closed loop: sense, detect, rank, plan, move.
class Explorer {
public:
    /// Copies the world and performs the initial full sweep at `start`.
    Explorer(const WorldMap& world, Pose start, ExplorerConfig cfg, ExplorerObserver observer = {});

    /// One iteration. Throws InvariantError if it neither revealed cells, grew the
    /// blacklist, nor completed.
    Event step();

    /// Extra sweep at the current pose after every frontier failed to plan.
    /// Throws PreconditionError when the blacklist is empty.
    Event recovery();

    const OccupancyGrid& belief() const noexcept { return belief_; }
    Pose pose() const noexcept { return pose_; }
    const Blacklist& blacklist() const noexcept { return blacklist_; }
    const ExplorationTrace& trace() const noexcept { return trace_; }
    const OccupancyGrid& reference() const noexcept { return reference_; }
    const ExplorerConfig& config() const noexcept { return cfg_; }

private:
    std::size_t sense_here();
    void snapshot(int iteration);

    WorldMap world_;
    ExplorerConfig cfg_;
    ExplorerObserver observer_;
    OccupancyGrid belief_;
    OccupancyGrid reference_;
    Pose pose_;
    Blacklist blacklist_;
    ExplorationTrace trace_;
    std::size_t known_ = 0;
    std::size_t recovery_revealed_ = 0;
};

struct ExplorationResult {
    OccupancyGrid belief;
    ExplorationTrace trace;
};

/// Steps until Complete or cfg.max_iterations.
ExplorationResult run(const WorldMap& world, Pose start, const ExplorerConfig& cfg,
                      ExplorerObserver observer = {});

}  // namespace explore

#endif  // EXPLORE_EXPLORER_HPP_
