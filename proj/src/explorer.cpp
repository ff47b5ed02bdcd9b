#include "explore/explorer.hpp"

#include <algorithm>
#include <sstream>

#include "explore/errors.hpp"

namespace explore {

void ExplorerConfig::validate() const {
    sensor.validate();
    if (max_iterations < 1) {
        throw PreconditionError("max_iterations must be at least 1");
    }
    if (!(inflation_radius >= 0.0)) {
        throw PreconditionError("inflation radius must be non-negative");
    }
    if (snapshot_every && *snapshot_every < 1) {
        throw PreconditionError("snapshot interval must be at least 1");
    }
}

std::string_view to_string(EventKind k) {
    switch (k) {
        case EventKind::MovedTo:
            return "moved";
        case EventKind::RecoveryTriggered:
            return "recovery";
        case EventKind::Complete:
            return "complete";
    }
    return "?";
}

std::string_view to_string(Termination t) {
    return t == Termination::Complete ? "complete" : "max-iterations";
}

void Blacklist::add(CellIndex median, std::size_t known_cells) {
    if (!contains(median)) {
        entries_.push_back({median, known_cells});
    }
}

bool Blacklist::contains(CellIndex median) const {
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](const Entry& e) { return e.median == median; });
}

void Blacklist::invalidate(std::size_t known_cells) {
    std::erase_if(entries_, [&](const Entry& e) { return e.known_cells < known_cells; });
}

Explorer::Explorer(const WorldMap& world, Pose start, ExplorerConfig cfg, ExplorerObserver observer)
    : world_(world), cfg_(std::move(cfg)), observer_(std::move(observer)), pose_(start) {
    cfg_.validate();
    reference_ = reachable_reference(world_, start.cell, cfg_.frontier_conn);
    belief_ = OccupancyGrid(world_.width(), world_.height(), world_.grid().resolution());
    trace_.initial_revealed = sense_here();
    snapshot(0);
}

std::size_t Explorer::sense_here() {
    const std::size_t n = sense(world_, pose_, cfg_.sensor, belief_);
    known_ += n;
    return n;
}

void Explorer::snapshot(int iteration) {
    if (cfg_.snapshot_every && observer_.on_snapshot && iteration % *cfg_.snapshot_every == 0) {
        observer_.on_snapshot(iteration, belief_, pose_);
    }
}

Event Explorer::step() {
    IterationRecord rec;
    rec.iteration = ++trace_.iteration_count;
    const std::size_t known_before = known_;

    rec.newly_revealed += sense_here();
    blacklist_.invalidate(known_);
    // Entries that just expired do not count: re-blacklisting them under the
    // current map is progress.
    const std::size_t blacklist_before = blacklist_.size();

    Detection det = detect(cfg_.detector, belief_, pose_, cfg_.frontier_conn);
    rec.detector = det.stats;
    rec.frontier_count = det.frontiers.size();

    std::erase_if(det.frontiers,
                  [&](const Frontier& f) { return blacklist_.contains(f.median); });

    Event ev{EventKind::Complete, std::nullopt};
    if (!det.frontiers.empty()) {
        const std::vector<Frontier> ranked = rank_frontiers(std::move(det.frontiers), pose_);
        Costmap costmap = inflate(belief_, cfg_.inflation_radius);
        costmap.set_traversable(pose_.cell, true);
        const CostField field(costmap, pose_.cell, cfg_.plan_conn);

        ev.kind = EventKind::RecoveryTriggered;
        for (const Frontier& f : ranked) {
            const std::optional<CellIndex> goal =
                goal_for_frontier(field, costmap, belief_, f, cfg_.frontier_conn);
            if (!goal) {
                if (observer_.on_blacklist) {
                    observer_.on_blacklist(BlacklistEvidence{f, belief_, costmap, pose_});
                }
                blacklist_.add(f.median, known_);
                continue;
            }
            const std::optional<Path> path =
                plan(costmap, pose_.cell, *goal, cfg_.plan_conn, cfg_.planner);
            if (!path) {
                throw InvariantError("planner found no path to a goal the cost field reached");
            }
            std::size_t moved_revealed = 0;
            for (std::size_t k = 1; k < path->cells.size(); ++k) {
                pose_.cell = path->cells[k];
                if (cfg_.sense_while_moving && k + 1 < path->cells.size()) {
                    moved_revealed += sense_here();
                }
            }
            moved_revealed += sense_here();
            if (moved_revealed == 0) {
                std::ostringstream os;
                os << "move to " << *goal << " revealed no cells";
                throw InvariantError(os.str());
            }
            rec.newly_revealed += moved_revealed;
            rec.goal = goal;
            rec.path_cost = path->length();
            trace_.distance_traveled += path->length();
            ev = {EventKind::MovedTo, goal};
            break;
        }
        if (ev.kind == EventKind::RecoveryTriggered) {
            recovery();
            rec.newly_revealed += recovery_revealed_;
        }
    }

    rec.event = ev.kind;
    rec.cells_known = known_;
    rec.coverage = map_agreement(belief_, reference_);
    rec.distance_traveled = trace_.distance_traveled;
    rec.blacklisted = blacklist_.size();
    trace_.iterations.push_back(rec);

    if (ev.kind != EventKind::Complete && known_ == known_before &&
        blacklist_.size() <= blacklist_before) {
        throw InvariantError("iteration made no progress");
    }
    snapshot(rec.iteration);
    return ev;
}

Event Explorer::recovery() {
    if (blacklist_.empty()) {
        throw PreconditionError("recovery requires at least one inaccessible frontier");
    }
    recovery_revealed_ = sense_here();
    blacklist_.invalidate(known_);
    return {EventKind::RecoveryTriggered, std::nullopt};
}

ExplorationResult run(const WorldMap& world, Pose start, const ExplorerConfig& cfg,
                      ExplorerObserver observer) {
    const auto t0 = std::chrono::steady_clock::now();
    Explorer explorer(world, start, cfg, std::move(observer));
    ExplorationTrace trace;
    for (int i = 0; i < cfg.max_iterations; ++i) {
        if (explorer.step().kind == EventKind::Complete) {
            break;
        }
    }
    trace = explorer.trace();
    trace.termination = (!trace.iterations.empty() &&
                         trace.iterations.back().event == EventKind::Complete)
                            ? Termination::Complete
                            : Termination::MaxIterations;
    trace.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - t0);
    return {explorer.belief(), std::move(trace)};
}

}  // namespace explore
