#pragma once

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "srnbench/csv.hpp"
#include "srnbench/report.hpp"
#include "srnbench/scenarios.hpp"

namespace srnbench {

namespace detail {

struct CommonFlags {
    std::string config_path;
    double dt = 0.0;
    double radius = 0.0;
    double speed = 0.0;
    double duration = 0.0;
};

inline bool flag_given(const CLI::App& sub, const char* name) {
    const CLI::Option* opt = sub.get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
}

/// defaults -> config file -> explicit flags, later wins.
inline BenchConfig resolve_config(const CLI::App& sub, const CommonFlags& flags) {
    BenchConfig config;
    if (flag_given(sub, "--config")) config = load_config(flags.config_path, config);
    if (flag_given(sub, "--dt")) {
        config.sim.dt = flags.dt;
        config.metrics.dt_default = flags.dt;
    }
    if (flag_given(sub, "--radius")) config.metrics.agent_radius_default = flags.radius;
    if (flag_given(sub, "--duration")) config.sim.max_duration = flags.duration;
    config.validate();
    return config;
}

inline std::string cell(std::optional<double> v, int width = 7, int precision = 2) {
    char buf[64];
    if (v)
        std::snprintf(buf, sizeof(buf), "%*.*f", width, precision, *v);
    else
        std::snprintf(buf, sizeof(buf), "%*s", width, "-");
    return buf;
}

inline void print_table_row(std::ostream& out, const MetricReport& report) {
    std::optional<KinematicSummary> ego_kin;
    for (const auto& [id, summary] : report.per_agent)
        if (id == report.ego_id) ego_kin = summary;
    const PairMetrics& pair = report.per_pair.front();

    char name[16];
    std::snprintf(name, sizeof(name), "%-8s", report.scenario_name.c_str());
    out << name;
    if (ego_kin) {
        out << cell(ego_kin->v_avg) << cell(ego_kin->a_avg) << cell(ego_kin->a_max)
            << cell(ego_kin->j_avg) << cell(ego_kin->j_max);
    } else {
        for (int i = 0; i < 5; ++i) out << cell(std::nullopt);
    }
    out << cell(pair.cd_avg) << cell(pair.svr) << cell(pair.collision_index) << cell(pair.min_ttc)
        << cell(pair.ppd) << cell(pair.intensity);
    char resp[64];
    std::snprintf(resp, sizeof(resp), "  (%.2f, %.2f)", pair.responsibility_a,
                  pair.responsibility_b);
    out << resp << "\n";
}

}  // namespace detail

/// Entry point of the `srnbench` command line tool.
/// `args` excludes the program name. Returns the process exit status.
inline int cli_main(std::vector<std::string> args) {
    CLI::App app{"Social robot navigation benchmark: two-agent scenario simulator and "
                 "trajectory metric battery",
                 "srnbench"};
    app.require_subcommand(1);

    detail::CommonFlags flags;
    std::string scenario, in_path, out_path, series_path, ego_id, pair_with;

    CLI::App* simulate = app.add_subcommand("simulate", "Run a catalog scenario, write its CSV");
    simulate->add_option("--scenario", scenario, "one of s1, s2, s3, s4, cross90")->required();
    simulate->add_option("--dt", flags.dt, "time step [s]");
    simulate->add_option("--radius", flags.radius, "agent body radius [m]");
    simulate->add_option("--speed", flags.speed, "desired speed [m/s]");
    simulate->add_option("--duration", flags.duration, "max duration [s]");
    simulate->add_option("--config", flags.config_path, "JSON config file");
    simulate->add_option("--out", out_path, "output CSV path (default <scenario>.csv)");

    CLI::App* evaluate_cmd = app.add_subcommand("evaluate", "Compute the metric report of a recording");
    evaluate_cmd->add_option("--in", in_path, "trajectory CSV")->required();
    evaluate_cmd->add_option("--ego", ego_id, "ego agent id (default: first agent in the file)");
    evaluate_cmd->add_option("--radius", flags.radius, "agent body radius [m]");
    evaluate_cmd->add_option("--config", flags.config_path, "JSON config file");
    evaluate_cmd->add_option("--out", out_path, "report JSON path (default: stdout)");
    evaluate_cmd->add_option("--series", series_path, "also write the step-wise conflict series CSV");
    evaluate_cmd->add_option("--pair-with", pair_with,
                             "partner agent for --series (default: first non-ego agent)");

    CLI::App* table = app.add_subcommand("table", "Run s1..s4 and print the summary table");
    table->add_option("--dt", flags.dt, "time step [s]");
    table->add_option("--radius", flags.radius, "agent body radius [m]");
    table->add_option("--speed", flags.speed, "desired speed [m/s]");
    table->add_option("--config", flags.config_path, "JSON config file");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (simulate->parsed()) {
            const BenchConfig config = detail::resolve_config(*simulate, flags);
            const double speed = detail::flag_given(*simulate, "--speed") ? flags.speed : 1.0;
            const ScenarioRecording recording = simulate_scenario(
                scenario, config.sim, config.social_force, config.metrics.agent_radius_default,
                speed);
            const std::filesystem::path path = out_path.empty() ? scenario + ".csv" : out_path;
            write_recording_csv(recording, path);
            std::cout << "wrote " << path.string() << " (" << recording.steps() << " samples, "
                      << format_double(recording.duration()) << " s"
                      << (recording.truncated() ? ", truncated" : "") << ")\n";
        } else if (evaluate_cmd->parsed()) {
            const BenchConfig config = detail::resolve_config(*evaluate_cmd, flags);
            std::vector<std::string> warnings;
            const ScenarioRecording recording = load_recording(in_path, config.metrics, &warnings);
            for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
            const std::string ego =
                ego_id.empty() ? recording.trajectories().front().agent_id() : ego_id;
            const MetricReport report = evaluate(recording, ego, config);
            const std::string json = report_json_string(report);
            if (out_path.empty()) {
                std::cout << json;
            } else {
                std::ofstream out(out_path);
                if (!out) throw IoError("cannot open '" + out_path + "' for writing");
                out << json;
            }
            if (!series_path.empty()) {
                std::string partner = pair_with;
                if (partner.empty()) {
                    for (const Trajectory& t : recording.trajectories())
                        if (t.agent_id() != ego) {
                            partner = t.agent_id();
                            break;
                        }
                }
                if (partner.empty())
                    throw ValidationError("recording has no partner agent for the series export");
                export_series(recording, ego, partner, config.metrics,
                              std::filesystem::path(series_path));
            }
        } else if (table->parsed()) {
            const BenchConfig config = detail::resolve_config(*table, flags);
            const double speed = detail::flag_given(*table, "--speed") ? flags.speed : 1.0;
            std::cout << "scenario  v_avg  a_avg  a_max  j_avg  j_max cd_avg    svr     ci"
                         "  minTTC    ppd  intens  resp (robot, human)\n";
            for (const char* name : {"s1", "s2", "s3", "s4"}) {
                const ScenarioRecording recording =
                    simulate_scenario(name, config.sim, config.social_force,
                                      config.metrics.agent_radius_default, speed);
                const MetricReport report = evaluate(recording, "robot", config);
                detail::print_table_row(std::cout, report);
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace srnbench
