#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "srnbench/config.hpp"
#include "srnbench/prediction.hpp"
#include "srnbench/trajectory.hpp"

namespace srnbench {

/// Conflict potential of one relative state: normalized overlap of the two
/// agents at the predicted closest encounter. 1 on a head-on course, 0 for
/// a clear miss, linear in between.
inline double conflict_potential(Vec2 r, Vec2 v, double s_sum) {
    if (!(s_sum > 0.0)) throw ValidationError("conflict_potential: s_sum must be positive");
    const double pdce = predict_closest_encounter(r, v).pdce;
    return std::max(0.0, 1.0 - pdce / s_sum);
}

/// Step-wise conflict quantities of one agent pair.
///
/// potential[k] is the conflict potential of the relative state at step k.
/// contribution_x[k] is the drop in potential attributable to agent x's
/// velocity change in the step leading to k: the potential that would hold
/// had x kept its previous velocity, minus the actual potential. Positive
/// values mean x steered away from the conflict. Step 0 has no previous
/// velocity and contributes 0.
struct ConflictSeries {
    std::vector<double> times;
    std::vector<double> potential;
    std::vector<double> contribution_a;
    std::vector<double> contribution_b;
    double c0 = 0.0;  // potential at the start of the interaction, 0 when none
    std::optional<std::size_t> interaction_start_index;

    bool has_interaction() const { return interaction_start_index.has_value(); }
};

/// Task-wise verdict of one agent pair.
struct PairVerdict {
    double intensity = 0.0;         // dimensionless * s
    double responsibility_a = 0.0;
    double responsibility_b = 0.0;
};

inline ConflictSeries conflict_series(const Trajectory& a, const Trajectory& b,
                                      double start_threshold = 0.0) {
    require_same_grid(a, b);
    const double s_sum = a.radius() + b.radius();
    const std::size_t n = a.size();

    ConflictSeries series;
    series.times.resize(n);
    series.potential.resize(n);
    series.contribution_a.assign(n, 0.0);
    series.contribution_b.assign(n, 0.0);

    for (std::size_t k = 0; k < n; ++k) {
        const Vec2 r = b[k].position - a[k].position;
        const Vec2 v = b[k].velocity - a[k].velocity;
        series.times[k] = a[k].t;
        series.potential[k] = conflict_potential(r, v, s_sum);
        if (k > 0) {
            // Substitute one agent's previous velocity while keeping current
            // positions and the partner's current velocity.
            const double held_a = conflict_potential(r, b[k].velocity - a[k - 1].velocity, s_sum);
            const double held_b = conflict_potential(r, b[k - 1].velocity - a[k].velocity, s_sum);
            series.contribution_a[k] = held_a - series.potential[k];
            series.contribution_b[k] = held_b - series.potential[k];
        }
        if (!series.interaction_start_index && series.potential[k] > start_threshold) {
            series.interaction_start_index = k;
            series.c0 = series.potential[k];
        }
    }
    return series;
}

namespace detail {

/// Trapezoidal weights over [first, last]: half at the ends, one inside.
inline double trapezoid(const std::vector<double>& y, std::size_t first, std::size_t last) {
    if (last <= first) return 0.0;
    double sum = 0.5 * (y[first] + y[last]);
    for (std::size_t k = first + 1; k < last; ++k) sum += y[k];
    return sum;
}

}  // namespace detail

/// Conflict intensity: time integral of the conflict potential over the
/// full recording (trapezoidal rule).
inline double intensity(const ConflictSeries& series, double dt) {
    if (!(dt > 0.0)) throw ValidationError("intensity: dt must be positive");
    if (series.potential.empty()) return 0.0;
    return detail::trapezoid(series.potential, 0, series.potential.size() - 1) * dt;
}

/// Responsibility of each agent: the per-agent conflict contributions,
/// integrated from the start of the interaction and normalized by the
/// initial conflict potential. The contributions are per-step potential
/// differences, so their rate is contribution/dt and the dt of the
/// trapezoidal integral cancels. An agent whose velocity never changes
/// scores exactly 0; conflict-escalating behavior accumulates negatively.
inline std::pair<double, double> responsibility(const ConflictSeries& series, double dt) {
    if (!(dt > 0.0)) throw ValidationError("responsibility: dt must be positive");
    if (!series.has_interaction()) return {0.0, 0.0};
    const std::size_t start = *series.interaction_start_index;
    const std::size_t last = series.potential.size() - 1;
    const double r_a = detail::trapezoid(series.contribution_a, start, last) / series.c0;
    const double r_b = detail::trapezoid(series.contribution_b, start, last) / series.c0;
    return {r_a, r_b};
}

/// One ego-vs-other pair inside an aggregate.
struct PairOutcome {
    std::string other_id;
    PairVerdict verdict;
    bool interacted = false;
};

/// Pairwise aggregation over a whole scene: the ego agent against every
/// other agent, with means over the pairs that actually interacted.
struct AggregateVerdict {
    std::optional<double> mean_intensity;
    std::optional<double> mean_ego_responsibility;
    std::vector<PairOutcome> pairs;
};

inline PairVerdict pair_verdict(const Trajectory& a, const Trajectory& b,
                                const MetricsConfig& cfg) {
    const ConflictSeries series = conflict_series(a, b, cfg.conflict_start_threshold);
    const double dt = a.dt();
    PairVerdict v;
    v.intensity = intensity(series, dt);
    std::tie(v.responsibility_a, v.responsibility_b) = responsibility(series, dt);
    return v;
}

inline AggregateVerdict aggregate_pairwise(const ScenarioRecording& recording,
                                           const std::string& ego_id, const MetricsConfig& cfg) {
    const Trajectory& ego = recording.require(ego_id);
    AggregateVerdict agg;
    double intensity_sum = 0.0, responsibility_sum = 0.0;
    std::size_t interacting = 0;
    for (const Trajectory& other : recording.trajectories()) {
        if (other.agent_id() == ego_id) continue;
        const ConflictSeries series = conflict_series(ego, other, cfg.conflict_start_threshold);
        PairOutcome outcome;
        outcome.other_id = other.agent_id();
        outcome.interacted = series.has_interaction();
        outcome.verdict.intensity = intensity(series, ego.dt());
        std::tie(outcome.verdict.responsibility_a, outcome.verdict.responsibility_b) =
            responsibility(series, ego.dt());
        if (outcome.interacted) {
            ++interacting;
            intensity_sum += outcome.verdict.intensity;
            responsibility_sum += outcome.verdict.responsibility_a;
        }
        agg.pairs.push_back(std::move(outcome));
    }
    if (agg.pairs.empty())
        throw ValidationError("aggregate_pairwise: recording has no partner for '" + ego_id + "'");
    if (interacting > 0) {
        agg.mean_intensity = intensity_sum / static_cast<double>(interacting);
        agg.mean_ego_responsibility = responsibility_sum / static_cast<double>(interacting);
    }
    return agg;
}

}  // namespace srnbench
