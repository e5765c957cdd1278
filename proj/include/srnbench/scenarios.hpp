#pragma once

#include <string>
#include <vector>

#include "srnbench/social_force.hpp"

namespace srnbench {

/// Built-in benchmark scenario: two agents and a name.
struct ScenarioCatalogEntry {
    std::string name;
    std::vector<AgentSpec> agents;
};

/// The benchmark catalog.
///
/// s1..s4 put "robot" and "human" 20 m apart on a shared line with swapped
/// goals and differ only in which of them runs the social-force planner:
/// s1 neither, s2 only the human, s3 only the robot, s4 both. cross90 has
/// two social-force agents on perpendicular courses meeting at the origin.
///
/// Placements are symmetric about the origin on purpose: mirroring a run
/// maps every coordinate to its exact floating-point negation, so paired
/// scenarios (s2/s3) and symmetric runs (s4) agree bit for bit.
inline std::vector<ScenarioCatalogEntry> scenario_catalog(double radius = 0.5,
                                                          double desired_speed = 1.0) {
    const Vec2 left{-10.0, 0.0}, right{10.0, 0.0};
    const Vec2 bottom{0.0, -10.0}, top{0.0, 10.0};
    auto agent = [&](const char* id, Vec2 start, Vec2 goal, PlannerKind planner) {
        return AgentSpec{id, start, goal, desired_speed, radius, planner};
    };
    using enum PlannerKind;
    return {
        {"s1", {agent("robot", left, right, constant_velocity),
                agent("human", right, left, constant_velocity)}},
        {"s2", {agent("robot", left, right, constant_velocity),
                agent("human", right, left, social_force)}},
        {"s3", {agent("robot", left, right, social_force),
                agent("human", right, left, constant_velocity)}},
        {"s4", {agent("robot", left, right, social_force),
                agent("human", right, left, social_force)}},
        {"cross90", {agent("robot", left, right, social_force),
                     agent("human", bottom, top, social_force)}},
    };
}

inline ScenarioCatalogEntry catalog_entry(const std::string& name, double radius = 0.5,
                                          double desired_speed = 1.0) {
    for (ScenarioCatalogEntry& entry : scenario_catalog(radius, desired_speed))
        if (entry.name == name) return std::move(entry);
    throw ValidationError("unknown scenario '" + name + "' (have s1, s2, s3, s4, cross90)");
}

inline ScenarioRecording simulate_scenario(const std::string& name, const SimConfig& sim,
                                           const SocialForceParams& params, double radius = 0.5,
                                           double desired_speed = 1.0) {
    const ScenarioCatalogEntry entry = catalog_entry(name, radius, desired_speed);
    return run_scenario(entry.agents, sim, params, entry.name);
}

}  // namespace srnbench
