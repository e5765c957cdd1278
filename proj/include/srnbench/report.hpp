#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "srnbench/bench_config.hpp"
#include "srnbench/conflict.hpp"
#include "srnbench/kinematics.hpp"
#include "srnbench/prediction.hpp"
#include "srnbench/proximity.hpp"

namespace srnbench {

/// All pairwise metrics of one unordered agent pair.
struct PairMetrics {
    std::string a;
    std::string b;
    std::optional<double> cd_avg;   // absent: never within sensing range
    std::optional<double> cd_max;
    double svr = 0.0;
    double collision_index = 0.0;
    std::optional<double> min_ttc;  // absent: no collision ever predicted
    double ppd = 0.0;
    double intensity = 0.0;
    double responsibility_a = 0.0;
    double responsibility_b = 0.0;
    bool interacted = false;
};

/// Task-wise results of one scenario. Self-describing: carries the full
/// configuration it was produced with.
struct MetricReport {
    std::string scenario_name;
    std::string ego_id;
    bool truncated = false;
    double dt = 0.0;
    double duration = 0.0;
    std::vector<std::pair<std::string, std::optional<KinematicSummary>>> per_agent;
    std::vector<PairMetrics> per_pair;
    std::optional<double> mean_intensity;           // over interacting ego pairs
    std::optional<double> mean_ego_responsibility;  // over interacting ego pairs
    BenchConfig config_echo;
};

/// Runs the whole metric battery over one recording: kinematics per agent,
/// the pairwise metrics for every unordered pair, and the ego-centric
/// pairwise aggregate. Undefined metrics stay absent instead of turning
/// into fake zeros.
inline MetricReport evaluate(const ScenarioRecording& recording, const std::string& ego_id,
                             const BenchConfig& config) {
    config.validate();
    recording.require(ego_id);  // reject unknown ego up front

    MetricReport report;
    report.scenario_name = recording.name();
    report.ego_id = ego_id;
    report.truncated = recording.truncated();
    report.dt = recording.dt();
    report.duration = recording.duration();
    report.config_echo = config;

    const MetricsConfig& cfg = config.metrics;
    for (const Trajectory& traj : recording.trajectories()) {
        std::optional<KinematicSummary> summary;
        if (traj.size() >= 4) summary = kinematic_summary(traj);
        report.per_agent.emplace_back(traj.agent_id(), summary);
    }

    const auto& trajs = recording.trajectories();
    for (std::size_t i = 0; i < trajs.size(); ++i) {
        for (std::size_t j = i + 1; j < trajs.size(); ++j) {
            const Trajectory& a = trajs[i];
            const Trajectory& b = trajs[j];
            PairMetrics pm;
            pm.a = a.agent_id();
            pm.b = b.agent_id();
            const ClearingDistanceResult cd = clearing_distance(a, b, cfg);
            pm.cd_avg = cd.cd_avg;
            pm.cd_max = cd.cd_max;
            pm.svr = space_violation_rate(a, b, cfg);
            pm.collision_index = collision_index(a, b, cfg);
            pm.min_ttc = min_ttc(a, b);
            pm.ppd = projected_path_duration(a, b, cfg);
            const ConflictSeries series = conflict_series(a, b, cfg.conflict_start_threshold);
            pm.interacted = series.has_interaction();
            pm.intensity = intensity(series, recording.dt());
            std::tie(pm.responsibility_a, pm.responsibility_b) =
                responsibility(series, recording.dt());
            report.per_pair.push_back(std::move(pm));
        }
    }

    if (trajs.size() >= 2) {
        const AggregateVerdict agg = aggregate_pairwise(recording, ego_id, cfg);
        report.mean_intensity = agg.mean_intensity;
        report.mean_ego_responsibility = agg.mean_ego_responsibility;
    }
    return report;
}

namespace detail {

inline nlohmann::json opt_json(const std::optional<double>& v) {
    if (v) return *v;
    return nullptr;
}

}  // namespace detail

inline nlohmann::json to_json(const KinematicSummary& k) {
    return {{"v_min", k.v_min}, {"v_avg", k.v_avg}, {"v_max", k.v_max},
            {"a_min", k.a_min}, {"a_avg", k.a_avg}, {"a_max", k.a_max},
            {"j_min", k.j_min}, {"j_avg", k.j_avg}, {"j_max", k.j_max}};
}

inline nlohmann::json to_json(const MetricReport& r) {
    nlohmann::json agents = nlohmann::json::object();
    for (const auto& [id, summary] : r.per_agent)
        agents[id] = summary ? to_json(*summary) : nlohmann::json(nullptr);

    nlohmann::json pairs = nlohmann::json::array();
    for (const PairMetrics& p : r.per_pair) {
        pairs.push_back({{"a", p.a},
                         {"b", p.b},
                         {"cd_avg", detail::opt_json(p.cd_avg)},
                         {"cd_max", detail::opt_json(p.cd_max)},
                         {"svr", p.svr},
                         {"collision_index", p.collision_index},
                         {"min_ttc", detail::opt_json(p.min_ttc)},
                         {"ppd", p.ppd},
                         {"intensity", p.intensity},
                         {"responsibility_a", p.responsibility_a},
                         {"responsibility_b", p.responsibility_b},
                         {"interacted", p.interacted}});
    }

    return {{"scenario_name", r.scenario_name},
            {"ego_id", r.ego_id},
            {"truncated", r.truncated},
            {"dt", r.dt},
            {"duration", r.duration},
            {"per_agent", agents},
            {"per_pair", pairs},
            {"aggregate",
             {{"mean_intensity", detail::opt_json(r.mean_intensity)},
              {"mean_ego_responsibility", detail::opt_json(r.mean_ego_responsibility)}}},
            {"config_echo", to_json(r.config_echo)}};
}

inline std::string report_json_string(const MetricReport& r) { return to_json(r).dump(2) + "\n"; }

}  // namespace srnbench
