#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "srnbench/trajectory.hpp"

namespace srnbench {

enum class PlannerKind {
    constant_velocity,  // ignores everyone, heads straight for the goal
    social_force,       // goal attraction plus pairwise interaction forces
};

struct AgentSpec {
    std::string id;
    Vec2 start;
    Vec2 goal;
    double desired_speed = 1.0;  // m/s
    double radius = 0.5;         // m
    PlannerKind planner = PlannerKind::social_force;
};

/// Parameters of the pairwise interaction force (Moussaid-style model).
struct SocialForceParams {
    double a_strength = 5.1;      // overall force scale, m/s^2
    double lambda = 3.0;          // weight of relative velocity in the interaction vector
    double gamma = 0.35;          // interaction range per unit interaction-vector norm
    double n = 1.0;               // angular width exponent of the lateral term
    double n_prime = 3.0;         // angular width exponent of the longitudinal term
    double relaxation_time = 0.9; // s, goal attraction time constant

    void validate() const {
        if (!(a_strength > 0.0 && lambda > 0.0 && gamma > 0.0 && n > 0.0 && n_prime > 0.0 &&
              relaxation_time > 0.0))
            throw ValidationError("social force parameters must all be positive");
    }
};

struct SimConfig {
    double dt = 0.1;              // s
    double max_duration = 40.0;   // s
    double goal_tolerance = 0.3;  // m
    double speed_cap_factor = 1.3;  // cap = factor * desired_speed

    void validate() const {
        if (!(dt > 0.0)) throw ValidationError("sim dt must be positive");
        if (!(max_duration >= dt)) throw ValidationError("max_duration must be at least dt");
        if (!(goal_tolerance > 0.0)) throw ValidationError("goal_tolerance must be positive");
        if (!(speed_cap_factor > 0.0)) throw ValidationError("speed_cap_factor must be positive");
    }
};

struct Neighbor {
    AgentSample state;
    double radius = 0.5;
};

/// Pairwise interaction force exerted on `self` by `other`, a_strength
/// included. The interaction vector blends the relative velocity (scaled by
/// lambda) with the line of sight; the force decays exponentially with
/// distance over gamma * |interaction vector| and splits into a component
/// along the interaction direction and a lateral component, each weighted by
/// a Gaussian of the angle between interaction direction and line of sight.
///
/// On an exact collision course that angle is 0 and the lateral term's sign
/// is undefined; it resolves to the agent's own left, which keeps the model
/// deterministic and breaks perfectly symmetric deadlocks the same way every
/// run. Coincident agents fall back to a fixed push perpendicular to the
/// agent's velocity.
inline Vec2 social_force_interaction(Vec2 self_pos, Vec2 self_vel, Vec2 other_pos,
                                     Vec2 other_vel, const SocialForceParams& params) {
    const Vec2 d_vec = self_pos - other_pos;
    const double dist = d_vec.norm();
    if (dist < 1e-12) {
        Vec2 dir = left_normal(normalized(self_vel));
        if (dir.norm_sq() == 0.0) dir = {1.0, 0.0};
        return dir * params.a_strength;
    }
    const Vec2 away = d_vec / dist;
    const Vec2 interaction = (other_vel - self_vel) * params.lambda + away;
    const double interaction_len = interaction.norm();
    if (interaction_len < 1e-12) return {0.0, 0.0};  // continuous limit: range B -> 0
    const Vec2 t_hat = interaction / interaction_len;

    const double range = params.gamma * interaction_len;
    const double theta = std::atan2(away.cross(t_hat), away.dot(t_hat));
    const double theta_sign = theta > 0.0 ? 1.0 : (theta < 0.0 ? -1.0 : 1.0);

    const auto sq = [](double x) { return x * x; };
    const double along = std::exp(-dist / range - sq(params.n_prime * range * theta));
    const double lateral = -theta_sign * std::exp(-dist / range - sq(params.n * range * theta));
    return (t_hat * along + left_normal(t_hat) * lateral) * params.a_strength;
}

/// One explicit-Euler step of the blind constant-velocity planner.
/// Within goal tolerance the agent parks: velocity zero, position held.
inline AgentSample step_constant_velocity(const AgentSample& state, Vec2 goal,
                                          double desired_speed, double goal_tolerance,
                                          double dt) {
    if (distance(state.position, goal) <= goal_tolerance)
        return {state.t + dt, state.position, {0.0, 0.0}};
    const Vec2 v = normalized(goal - state.position) * desired_speed;
    return {state.t + dt, state.position + v * dt, v};
}

/// One semi-implicit Euler step of the social-force planner: relax toward
/// the desired velocity, add the neighbor interactions, cap the speed, then
/// advance the position with the new velocity.
inline AgentSample step_social_force(const AgentSample& state, Vec2 goal, double desired_speed,
                                     double speed_cap, std::span<const Neighbor> neighbors,
                                     const SocialForceParams& params, double goal_tolerance,
                                     double dt) {
    if (distance(state.position, goal) <= goal_tolerance)
        return {state.t + dt, state.position, {0.0, 0.0}};
    const Vec2 desired = normalized(goal - state.position) * desired_speed;
    Vec2 force = (desired - state.velocity) / params.relaxation_time;
    for (const Neighbor& nb : neighbors)
        force = force + social_force_interaction(state.position, state.velocity,
                                                 nb.state.position, nb.state.velocity, params);
    Vec2 v = state.velocity + force * dt;
    const double speed = v.norm();
    if (speed > speed_cap) v = v * (speed_cap / speed);
    return {state.t + dt, state.position + v * dt, v};
}

/// Synchronous fixed-step run of a whole scenario. Every agent starts at
/// cruise velocity toward its goal; the run ends once every agent is within
/// goal tolerance or max_duration elapses (then the truncated flag is set).
/// Identical inputs produce bit-identical recordings.
inline ScenarioRecording run_scenario(const std::vector<AgentSpec>& agents, const SimConfig& sim,
                                      const SocialForceParams& params,
                                      const std::string& name = "scenario") {
    sim.validate();
    params.validate();
    if (agents.empty()) throw ValidationError("run_scenario: needs at least one agent");
    for (const AgentSpec& a : agents) {
        if (!(a.desired_speed > 0.0))
            throw ValidationError("agent '" + a.id + "': desired_speed must be positive");
        if (!(a.radius > 0.0)) throw ValidationError("agent '" + a.id + "': radius must be positive");
        if (a.start == a.goal) throw ValidationError("agent '" + a.id + "': start equals goal");
    }

    const std::size_t count = agents.size();
    std::vector<AgentSample> current(count);
    std::vector<std::vector<AgentSample>> history(count);
    for (std::size_t i = 0; i < count; ++i) {
        current[i] = {0.0, agents[i].start,
                      normalized(agents[i].goal - agents[i].start) * agents[i].desired_speed};
        history[i].push_back(current[i]);
    }

    auto all_reached = [&] {
        for (std::size_t i = 0; i < count; ++i)
            if (distance(current[i].position, agents[i].goal) > sim.goal_tolerance) return false;
        return true;
    };

    bool truncated = false;
    double t = 0.0;
    std::vector<AgentSample> next(count);
    std::vector<Neighbor> neighbors;
    while (true) {
        if (t + sim.dt > sim.max_duration + 1e-9) {
            truncated = !all_reached();
            break;
        }
        for (std::size_t i = 0; i < count; ++i) {
            const AgentSpec& spec = agents[i];
            if (spec.planner == PlannerKind::constant_velocity) {
                next[i] = step_constant_velocity(current[i], spec.goal, spec.desired_speed,
                                                 sim.goal_tolerance, sim.dt);
            } else {
                neighbors.clear();
                for (std::size_t j = 0; j < count; ++j)
                    if (j != i) neighbors.push_back({current[j], agents[j].radius});
                next[i] = step_social_force(current[i], spec.goal, spec.desired_speed,
                                            sim.speed_cap_factor * spec.desired_speed, neighbors,
                                            params, sim.goal_tolerance, sim.dt);
            }
        }
        current = next;
        t = current.front().t;
        for (std::size_t i = 0; i < count; ++i) history[i].push_back(current[i]);
        if (all_reached()) break;
    }

    std::vector<Trajectory> trajectories;
    trajectories.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        trajectories.emplace_back(agents[i].id, agents[i].radius, std::move(history[i]), sim.dt);
    return ScenarioRecording(name, std::move(trajectories), truncated);
}

}  // namespace srnbench
