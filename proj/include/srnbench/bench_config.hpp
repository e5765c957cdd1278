#pragma once

#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "srnbench/config.hpp"
#include "srnbench/social_force.hpp"

namespace srnbench {

/// Everything tunable in one place: metric parameters, simulation loop
/// parameters and social-force parameters. This is also the config file
/// schema (JSON, field names one-to-one).
struct BenchConfig {
    MetricsConfig metrics;
    SimConfig sim;
    SocialForceParams social_force;

    void validate() const {
        metrics.validate();
        sim.validate();
        social_force.validate();
    }
};

namespace detail {

template <typename T>
void read_field(const nlohmann::json& obj, const char* key, T& target) {
    if (obj.contains(key)) target = obj.at(key).get<T>();
}

inline void check_known_keys(const nlohmann::json& obj, const char* section,
                             std::initializer_list<const char*> keys) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* k : keys)
            if (key == k) known = true;
        if (!known)
            throw ValidationError(std::string("config: unknown key '") + key + "' in section '" +
                                  section + "'");
    }
}

}  // namespace detail

inline nlohmann::json to_json(const MetricsConfig& m) {
    return {{"agent_radius_default", m.agent_radius_default},
            {"personal_space_radius", m.personal_space_radius},
            {"ci_sigma", m.ci_sigma},
            {"safety_zone_horizon", m.safety_zone_horizon},
            {"safety_zone_width_factor", m.safety_zone_width_factor},
            {"encounter_sensing_range", m.encounter_sensing_range},
            {"conflict_start_threshold", m.conflict_start_threshold},
            {"dt_default", m.dt_default}};
}

inline nlohmann::json to_json(const SimConfig& s) {
    return {{"dt", s.dt},
            {"max_duration", s.max_duration},
            {"goal_tolerance", s.goal_tolerance},
            {"speed_cap_factor", s.speed_cap_factor}};
}

inline nlohmann::json to_json(const SocialForceParams& p) {
    return {{"a_strength", p.a_strength}, {"lambda", p.lambda},
            {"gamma", p.gamma},           {"n", p.n},
            {"n_prime", p.n_prime},       {"relaxation_time", p.relaxation_time}};
}

inline nlohmann::json to_json(const BenchConfig& c) {
    return {{"metrics", to_json(c.metrics)}, {"sim", to_json(c.sim)},
            {"social_force", to_json(c.social_force)}};
}

/// Applies a parsed config document on top of `base`. Sections and fields
/// are all optional; unknown keys are rejected so typos cannot silently
/// fall back to defaults.
inline BenchConfig apply_config_json(const nlohmann::json& doc, BenchConfig base = {}) {
    detail::check_known_keys(doc, "top level", {"metrics", "sim", "social_force"});
    if (doc.contains("metrics")) {
        const auto& m = doc.at("metrics");
        detail::check_known_keys(m, "metrics",
                                 {"agent_radius_default", "personal_space_radius", "ci_sigma",
                                  "safety_zone_horizon", "safety_zone_width_factor",
                                  "encounter_sensing_range", "conflict_start_threshold",
                                  "dt_default"});
        detail::read_field(m, "agent_radius_default", base.metrics.agent_radius_default);
        detail::read_field(m, "personal_space_radius", base.metrics.personal_space_radius);
        detail::read_field(m, "ci_sigma", base.metrics.ci_sigma);
        detail::read_field(m, "safety_zone_horizon", base.metrics.safety_zone_horizon);
        detail::read_field(m, "safety_zone_width_factor", base.metrics.safety_zone_width_factor);
        detail::read_field(m, "encounter_sensing_range", base.metrics.encounter_sensing_range);
        detail::read_field(m, "conflict_start_threshold", base.metrics.conflict_start_threshold);
        detail::read_field(m, "dt_default", base.metrics.dt_default);
    }
    if (doc.contains("sim")) {
        const auto& s = doc.at("sim");
        detail::check_known_keys(s, "sim",
                                 {"dt", "max_duration", "goal_tolerance", "speed_cap_factor"});
        detail::read_field(s, "dt", base.sim.dt);
        detail::read_field(s, "max_duration", base.sim.max_duration);
        detail::read_field(s, "goal_tolerance", base.sim.goal_tolerance);
        detail::read_field(s, "speed_cap_factor", base.sim.speed_cap_factor);
    }
    if (doc.contains("social_force")) {
        const auto& p = doc.at("social_force");
        detail::check_known_keys(
            p, "social_force", {"a_strength", "lambda", "gamma", "n", "n_prime", "relaxation_time"});
        detail::read_field(p, "a_strength", base.social_force.a_strength);
        detail::read_field(p, "lambda", base.social_force.lambda);
        detail::read_field(p, "gamma", base.social_force.gamma);
        detail::read_field(p, "n", base.social_force.n);
        detail::read_field(p, "n_prime", base.social_force.n_prime);
        detail::read_field(p, "relaxation_time", base.social_force.relaxation_time);
    }
    base.validate();
    return base;
}

inline BenchConfig load_config(const std::filesystem::path& path, BenchConfig base = {}) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config '" + path.string() + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw IoError("config '" + path.string() + "': " + e.what());
    }
    return apply_config_json(doc, base);
}

}  // namespace srnbench
