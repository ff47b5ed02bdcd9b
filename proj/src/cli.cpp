#include "explore/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "explore/bench.hpp"
#include "explore/errors.hpp"
#include "explore/explorer.hpp"
#include "explore/map_io.hpp"
#include "explore/metrics.hpp"

namespace explore::cli {

void RunArgs::validate() const {
    if (world_path && gen) {
        throw UsageError("--world and --gen are mutually exclusive");
    }
    if (trials < 1) {
        throw UsageError("--trials must be at least 1");
    }
    if (known_fraction && !(*known_fraction > 0.0 && *known_fraction <= 1.0)) {
        throw UsageError("--known must lie in (0, 1]");
    }
}

namespace {

AsciiWorld load_world(const RunArgs& args) {
    if (args.world_path) {
        try {
            return load_ascii_world_file(*args.world_path);
        } catch (const ParseError& e) {
            throw IoError(args.world_path->string() + ": " + e.what());
        }
    }
    if (args.gen) {
        return generate_world(*args.gen);
    }
    throw UsageError("one of --world or --gen is required");
}

ExplorerConfig make_config(const RunArgs& args) {
    ExplorerConfig cfg;
    cfg.detector = args.detector;
    cfg.sensor.max_range = args.range;
    cfg.sensor.ray_count = args.rays;
    cfg.inflation_radius = args.inflate;
    cfg.frontier_conn = args.conn;
    cfg.plan_conn = args.plan_conn;
    cfg.max_iterations = args.max_iters;
    cfg.snapshot_every = args.snapshot_every;
    return cfg;
}

void ensure_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) {
        throw IoError("cannot create output directory " + dir.string());
    }
}

std::string snapshot_name(int iteration) {
    char name[64];
    std::snprintf(name, sizeof name, "snapshot_%04d.pgm", iteration);
    return name;
}

double median(std::vector<double> v) {
    if (v.empty()) {
        return 0.0;
    }
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    return v[mid];
}

template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const PreconditionError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailed;
    }
}

}  // namespace

int cmd_explore(const RunArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        args.validate();
        const AsciiWorld w = load_world(args);
        const ExplorerConfig cfg = make_config(args);
        cfg.validate();
        ensure_dir(args.out_dir);

        ExplorerObserver observer;
        observer.on_snapshot = [&](int iteration, const OccupancyGrid& belief, Pose) {
            save_pgm(belief, args.out_dir / snapshot_name(iteration));
        };
        const ExplorationResult result = run(w.world, w.start, cfg, observer);

        save_pgm(result.belief, args.out_dir / "final_map.pgm");
        const std::filesystem::path metrics =
            args.metrics_path ? *args.metrics_path : args.out_dir / "metrics.csv";
        write_file(metrics, format_metrics_csv(metrics_rows(result.trace)));

        const double coverage =
            map_agreement(result.belief, reachable_reference(w.world, w.start.cell, cfg.frontier_conn));
        char line[256];
        std::snprintf(line, sizeof line,
                      "termination=%s coverage=%.2f%% distance=%.2f iterations=%d",
                      std::string(to_string(result.trace.termination)).c_str(), 100.0 * coverage,
                      result.trace.distance_traveled, result.trace.iteration_count);
        out << line << '\n';
        return result.trace.termination == Termination::Complete ? kExitOk : kExitFailed;
    });
}

int cmd_bench(const RunArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        args.validate();
        ensure_dir(args.out_dir);

        std::vector<BenchTrial> trials;
        if (args.world_path) {
            const AsciiWorld w = load_world(args);
            ExplorerConfig cfg = make_config(args);
            cfg.snapshot_every = 1;
            std::vector<BenchTrial> recorded;
            ExplorerObserver observer;
            observer.on_snapshot = [&](int, const OccupancyGrid& belief, Pose pose) {
                recorded.push_back(BenchTrial{belief, pose, w.world});
            };
            run(w.world, w.start, cfg, observer);
            const std::size_t want = std::min(recorded.size(), static_cast<std::size_t>(args.trials));
            for (std::size_t k = 0; k < want; ++k) {
                trials.push_back(std::move(recorded[k * recorded.size() / want]));
            }
        } else {
            const WorldGenParams base = args.gen ? *args.gen : WorldGenParams{512, 512, 0.1, 1};
            trials = random_bench_trials(base, args.trials, args.known_fraction, Exec::Parallel);
        }

        std::string csv = std::string(kBenchHeader) + "\n";
        std::vector<double> wfd_us;
        std::vector<double> naive_us;
        int failures = 0;
        for (std::size_t i = 0; i < trials.size(); ++i) {
            const BenchResult r = run_bench_trial(trials[i], args.conn);
            csv += format_bench_row(r) + "\n";
            wfd_us.push_back(r.wfd_time_us);
            naive_us.push_back(r.naive_time_us);
            if (!r.agree) {
                ++failures;
                const std::string stem = "bench_fail_" + std::to_string(i);
                save_pgm(trials[i].belief, args.out_dir / (stem + ".pgm"));
                if (trials[i].world) {
                    write_file(args.out_dir / (stem + "_world.txt"),
                               format_ascii_world(*trials[i].world, trials[i].pose));
                }
                err << "trial " << i << ": detectors disagree; dumped " << stem << ".pgm (pose "
                    << trials[i].pose.cell << ")\n";
            }
        }
        const std::filesystem::path metrics =
            args.metrics_path ? *args.metrics_path : args.out_dir / "bench.csv";
        write_file(metrics, csv);

        if (failures > 0) {
            out << "FAILED: " << failures << " of " << trials.size()
                << " trials had differing frontier sets\n";
            return kExitFailed;
        }
        char line[256];
        std::snprintf(line, sizeof line,
                      "trials=%zu agree=yes median_wfd_us=%.1f median_naive_us=%.1f",
                      trials.size(), median(wfd_us), median(naive_us));
        out << line << '\n';
        return kExitOk;
    });
}

int cmd_genworld(const WorldGenParams& params, const std::optional<std::filesystem::path>& destination,
                 std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const AsciiWorld w = generate_world(params);
        const double fraction = start_component_fraction(w.world, w.start.cell);
        if (fraction < kMinStartComponent) {
            throw InvariantError("generated start component covers only " +
                                 std::to_string(fraction) + " of free cells");
        }
        const std::string text = format_ascii_world(w.world, w.start);
        if (destination) {
            write_file(*destination, text);
        } else {
            out << text;
        }
        return kExitOk;
    });
}

namespace {

void add_run_options(CLI::App& cmd, RunArgs& args, std::string& world, std::string& gen,
                     std::string& detector, int& conn, int& plan_conn, int& snapshot,
                     std::string& out_dir, std::string& metrics) {
    cmd.add_option("--world", world, "ASCII world file");
    cmd.add_option("--gen", gen, "random world WxH:DENSITY:SEED");
    cmd.add_option("--detector", detector, "frontier detector")
        ->check(CLI::IsMember({"wfd", "naive"}));
    cmd.add_option("--range", args.range, "sensor range in cells");
    cmd.add_option("--rays", args.rays, "rays per sweep");
    cmd.add_option("--inflate", args.inflate, "obstacle inflation radius in cells");
    cmd.add_option("--conn", conn, "frontier connectivity")->check(CLI::IsMember({4, 8}));
    cmd.add_option("--plan-conn", plan_conn, "path planning connectivity")
        ->check(CLI::IsMember({4, 8}));
    cmd.add_option("--max-iters", args.max_iters, "iteration limit");
    cmd.add_option("--snapshot-every", snapshot, "write a belief PGM every N iterations");
    cmd.add_option("--out", out_dir, "output directory");
    cmd.add_option("--metrics", metrics, "metrics CSV path");
}

}  // namespace

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Frontier-based exploration simulator"};
    app.require_subcommand(1);

    RunArgs args;
    std::string world;
    std::string gen;
    std::string detector = "wfd";
    int conn = 8;
    int plan_conn = 4;
    int snapshot = 0;
    std::string out_dir = ".";
    std::string metrics;
    double known = 0.0;

    CLI::App* explore_cmd = app.add_subcommand("explore", "explore a world until no frontiers remain");
    add_run_options(*explore_cmd, args, world, gen, detector, conn, plan_conn, snapshot, out_dir,
                    metrics);

    CLI::App* bench_cmd = app.add_subcommand("bench", "compare WFD against the full-grid detector");
    add_run_options(*bench_cmd, args, world, gen, detector, conn, plan_conn, snapshot, out_dir,
                    metrics);
    bench_cmd->add_option("--trials", args.trials, "number of trials");
    bench_cmd->add_option("--known", known, "explored fraction of random grids");

    std::string gen_spec;
    std::string gen_out;
    CLI::App* genworld_cmd = app.add_subcommand("genworld", "write a random ASCII world");
    genworld_cmd->add_option("--gen", gen_spec, "WxH:DENSITY:SEED")->required();
    genworld_cmd->add_option("--out", gen_out, "destination file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    if (genworld_cmd->parsed()) {
        WorldGenParams params;
        try {
            params = parse_gen_spec(gen_spec);
        } catch (const PreconditionError& e) {
            err << "usage error: " << e.what() << '\n';
            return kExitUsage;
        }
        return cmd_genworld(params, gen_out.empty() ? std::nullopt
                                                    : std::optional<std::filesystem::path>(gen_out),
                            out, err);
    }

    try {
        if (!world.empty()) {
            args.world_path = world;
        }
        if (!gen.empty()) {
            args.gen = parse_gen_spec(gen);
        }
    } catch (const PreconditionError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    args.detector = detector == "naive" ? Detector::Naive : Detector::WFD;
    args.conn = conn == 4 ? Connectivity::Four : Connectivity::Eight;
    args.plan_conn = plan_conn == 8 ? Connectivity::Eight : Connectivity::Four;
    if (snapshot != 0) {
        args.snapshot_every = snapshot;
    }
    args.out_dir = out_dir;
    if (!metrics.empty()) {
        args.metrics_path = metrics;
    }
    if (known != 0.0) {
        args.known_fraction = known;
    }

    if (explore_cmd->parsed()) {
        return cmd_explore(args, out, err);
    }
    return cmd_bench(args, out, err);
}

}  // namespace explore::cli
