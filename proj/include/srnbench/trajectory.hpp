#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "srnbench/errors.hpp"
#include "srnbench/vec2.hpp"

namespace srnbench {

/// Tolerance for "same instant" / "uniform spacing" checks on time grids.
inline constexpr double kGridTolerance = 1e-9;

/// Sanity bound on recorded speeds; anything faster is treated as corrupt input.
inline constexpr double kMaxSpeed = 100.0;

/// One kinematic sample of one agent.
struct AgentSample {
    double t = 0.0;   // seconds
    Vec2 position;    // meters
    Vec2 velocity;    // m/s
};

namespace detail {

inline void check_samples(const std::string& agent_id,
                          const std::vector<AgentSample>& samples, double dt) {
    if (samples.size() < 2)
        throw ValidationError("trajectory '" + agent_id + "': needs at least 2 samples");
    if (!(dt > 0.0))
        throw ValidationError("trajectory '" + agent_id + "': dt must be positive");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const AgentSample& s = samples[i];
        if (!(s.t >= 0.0) || !std::isfinite(s.t) || !s.position.finite() || !s.velocity.finite())
            throw ValidationError("trajectory '" + agent_id + "': non-finite sample at index " +
                                  std::to_string(i));
        if (s.velocity.norm() >= kMaxSpeed)
            throw ValidationError("trajectory '" + agent_id + "': speed exceeds " +
                                  std::to_string(kMaxSpeed) + " m/s at index " +
                                  std::to_string(i));
        if (i > 0) {
            const double step = s.t - samples[i - 1].t;
            if (std::abs(step - dt) > kGridTolerance)
                throw ValidationError("trajectory '" + agent_id +
                                      "': non-uniform time step at index " + std::to_string(i) +
                                      " (got " + std::to_string(step) + ", expected " +
                                      std::to_string(dt) + ")");
        }
    }
}

}  // namespace detail

/// Time-ordered kinematic history of one agent on a uniform grid.
/// Immutable after construction; construction validates all invariants.
class Trajectory {
public:
    Trajectory(std::string agent_id, double radius, std::vector<AgentSample> samples, double dt)
        : agent_id_(std::move(agent_id)), radius_(radius), samples_(std::move(samples)), dt_(dt) {
        if (!(radius_ > 0.0))
            throw ValidationError("trajectory '" + agent_id_ + "': radius must be positive");
        detail::check_samples(agent_id_, samples_, dt_);
    }

    const std::string& agent_id() const { return agent_id_; }
    double radius() const { return radius_; }
    double dt() const { return dt_; }
    const std::vector<AgentSample>& samples() const { return samples_; }
    std::size_t size() const { return samples_.size(); }
    const AgentSample& operator[](std::size_t i) const { return samples_[i]; }
    double start_time() const { return samples_.front().t; }
    double duration() const { return samples_.back().t - samples_.front().t; }

private:
    std::string agent_id_;
    double radius_;
    std::vector<AgentSample> samples_;
    double dt_;
};

/// True when both trajectories sample the same instants.
inline bool same_grid(const Trajectory& a, const Trajectory& b) {
    if (a.size() != b.size()) return false;
    if (std::abs(a.dt() - b.dt()) > kGridTolerance) return false;
    return std::abs(a.start_time() - b.start_time()) <= kGridTolerance;
}

inline void require_same_grid(const Trajectory& a, const Trajectory& b) {
    if (!same_grid(a, b))
        throw ValidationError("trajectories '" + a.agent_id() + "' and '" + b.agent_id() +
                              "' are not on the same time grid");
}

/// Synchronized trajectories of all agents of one scenario run.
class ScenarioRecording {
public:
    ScenarioRecording(std::string name, std::vector<Trajectory> trajectories, bool truncated = false)
        : name_(std::move(name)), trajectories_(std::move(trajectories)), truncated_(truncated) {
        if (trajectories_.empty())
            throw ValidationError("recording '" + name_ + "': needs at least one trajectory");
        const Trajectory& first = trajectories_.front();
        for (std::size_t i = 1; i < trajectories_.size(); ++i) {
            if (!same_grid(first, trajectories_[i]))
                throw ValidationError("recording '" + name_ + "': trajectory '" +
                                      trajectories_[i].agent_id() +
                                      "' is not on the shared time grid");
            for (std::size_t j = 0; j < i; ++j)
                if (trajectories_[j].agent_id() == trajectories_[i].agent_id())
                    throw ValidationError("recording '" + name_ + "': duplicate agent id '" +
                                          trajectories_[i].agent_id() + "'");
        }
    }

    const std::string& name() const { return name_; }
    const std::vector<Trajectory>& trajectories() const { return trajectories_; }
    double dt() const { return trajectories_.front().dt(); }
    double duration() const { return trajectories_.front().duration(); }
    std::size_t steps() const { return trajectories_.front().size(); }
    bool truncated() const { return truncated_; }

    const Trajectory* find(const std::string& agent_id) const {
        for (const Trajectory& t : trajectories_)
            if (t.agent_id() == agent_id) return &t;
        return nullptr;
    }

    const Trajectory& require(const std::string& agent_id) const {
        if (const Trajectory* t = find(agent_id)) return *t;
        throw ValidationError("recording '" + name_ + "': no agent '" + agent_id + "'");
    }

private:
    std::string name_;
    std::vector<Trajectory> trajectories_;
    bool truncated_;
};

/// Builds a trajectory from positions alone. Velocity at step k is the forward
/// difference (p[k+1] - p[k]) / dt; the last sample repeats the previous velocity.
inline Trajectory resample_velocities(std::string agent_id, double radius,
                                      const std::vector<std::pair<double, Vec2>>& positions,
                                      double dt) {
    if (positions.size() < 2)
        throw ValidationError("resample_velocities: needs at least 2 position samples");
    for (std::size_t i = 1; i < positions.size(); ++i) {
        const double step = positions[i].first - positions[i - 1].first;
        if (std::abs(step - dt) > kGridTolerance)
            throw ValidationError("resample_velocities: non-uniform time step at index " +
                                  std::to_string(i));
    }
    std::vector<AgentSample> samples(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i) {
        samples[i].t = positions[i].first;
        samples[i].position = positions[i].second;
        if (i + 1 < positions.size())
            samples[i].velocity = (positions[i + 1].second - positions[i].second) / dt;
        else
            samples[i].velocity = samples[i - 1].velocity;
    }
    return Trajectory(std::move(agent_id), radius, std::move(samples), dt);
}

}  // namespace srnbench
