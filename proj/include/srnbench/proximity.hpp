#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "srnbench/config.hpp"
#include "srnbench/trajectory.hpp"

namespace srnbench {

/// Maximal contiguous run of samples with center distance below the
/// sensing range. Indices are inclusive.
struct Encounter {
    std::size_t start_index = 0;
    std::size_t end_index = 0;
    double min_distance = 0.0;      // m
    double min_distance_time = 0.0; // s
};

struct ClearingDistanceResult {
    std::optional<double> cd_avg;  // absent when no encounter occurred
    std::optional<double> cd_max;
    std::vector<Encounter> encounters;
};

/// Euclidean center-to-center distance per step.
inline std::vector<double> center_distance_series(const Trajectory& a, const Trajectory& b) {
    require_same_grid(a, b);
    std::vector<double> d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        d[i] = distance(a[i].position, b[i].position);
    return d;
}

/// Clearing distance: per-encounter minimum distance, averaged and maxed
/// over encounters. Distances are center-to-center.
inline ClearingDistanceResult clearing_distance(const Trajectory& a, const Trajectory& b,
                                                const MetricsConfig& cfg) {
    const std::vector<double> dist = center_distance_series(a, b);
    ClearingDistanceResult result;

    std::optional<Encounter> open;
    auto close_encounter = [&](std::size_t end) {
        open->end_index = end;
        result.encounters.push_back(*open);
        open.reset();
    };
    for (std::size_t i = 0; i < dist.size(); ++i) {
        if (dist[i] < cfg.encounter_sensing_range) {
            if (!open) open = Encounter{i, i, dist[i], a[i].t};
            if (dist[i] < open->min_distance) {
                open->min_distance = dist[i];
                open->min_distance_time = a[i].t;
            }
        } else if (open) {
            close_encounter(i - 1);
        }
    }
    if (open) close_encounter(dist.size() - 1);

    if (!result.encounters.empty()) {
        double sum = 0.0, mx = result.encounters.front().min_distance;
        for (const Encounter& e : result.encounters) {
            sum += e.min_distance;
            mx = std::max(mx, e.min_distance);
        }
        result.cd_avg = sum / static_cast<double>(result.encounters.size());
        result.cd_max = mx;
    }
    return result;
}

/// Fraction of samples during which the agents sit inside each other's
/// personal space (center distance below personal_space_radius).
inline double space_violation_rate(const Trajectory& a, const Trajectory& b,
                                   const MetricsConfig& cfg) {
    const std::vector<double> dist = center_distance_series(a, b);
    std::size_t violations = 0;
    for (double d : dist)
        if (d < cfg.personal_space_radius) ++violations;
    return static_cast<double>(violations) / static_cast<double>(dist.size());
}

/// Collision index: max over time of exp(-d^2 / (2 sigma^2)).
/// Equals 1 exactly when the centers touch at some sample.
inline double collision_index(const Trajectory& a, const Trajectory& b,
                              const MetricsConfig& cfg) {
    const std::vector<double> dist = center_distance_series(a, b);
    const double two_sigma_sq = 2.0 * cfg.ci_sigma * cfg.ci_sigma;
    double worst = 0.0;
    for (double d : dist)
        worst = std::max(worst, std::exp(-(d * d) / two_sigma_sq));
    return worst;
}

}  // namespace srnbench
