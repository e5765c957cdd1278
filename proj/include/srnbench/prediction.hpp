#pragma once

#include <cmath>
#include <optional>

#include "srnbench/config.hpp"
#include "srnbench/safety_zone.hpp"
#include "srnbench/trajectory.hpp"

namespace srnbench {

/// Constant-velocity closest-encounter prediction for one relative state.
struct EncounterPrediction {
    double pdce = 0.0;      // m, predicted distance at closest encounter
    double ttce = 0.0;      // s, time to closest encounter (>= 0)
    Vec2 relative_position; // m
    Vec2 relative_velocity; // m/s
};

/// Minimizes |r + v t| over t >= 0.
///
/// For approaching agents this reproduces the perpendicular-distance formula
/// |r x v| / |v|. For receding or co-moving agents the minimum sits at t = 0,
/// so the prediction clamps to the current distance; without the clamp an
/// already-passed encounter would keep counting forever.
inline EncounterPrediction predict_closest_encounter(Vec2 r, Vec2 v) {
    EncounterPrediction p;
    p.relative_position = r;
    p.relative_velocity = v;
    const double vv = v.norm_sq();
    p.ttce = vv > 0.0 ? std::max(0.0, -r.dot(v) / vv) : 0.0;
    p.pdce = (r + v * p.ttce).norm();
    return p;
}

/// Smallest t >= 0 with |r + v t| = s_sum; 0 when already overlapping;
/// absent when no collision is predicted.
inline std::optional<double> time_to_collision(Vec2 r, Vec2 v, double s_sum) {
    if (!(s_sum > 0.0)) throw ValidationError("time_to_collision: s_sum must be positive");
    if (r.norm_sq() <= s_sum * s_sum) return 0.0;
    const double a = v.norm_sq();
    const double b = 2.0 * r.dot(v);
    if (a == 0.0 || b >= 0.0) return std::nullopt;  // stationary or receding
    const double c = r.norm_sq() - s_sum * s_sum;
    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) return std::nullopt;
    return (-b - std::sqrt(disc)) / (2.0 * a);
}

/// Minimum time-to-collision over all samples; absent when a collision is
/// never predicted anywhere along the recording.
inline std::optional<double> min_ttc(const Trajectory& a, const Trajectory& b) {
    require_same_grid(a, b);
    const double s_sum = a.radius() + b.radius();
    std::optional<double> best;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Vec2 r = b[i].position - a[i].position;
        const Vec2 v = b[i].velocity - a[i].velocity;
        if (auto ttc = time_to_collision(r, v, s_sum))
            if (!best || *ttc < *best) best = *ttc;
    }
    return best;
}

/// Total time during which the frontal safety zones of the two agents overlap.
inline double projected_path_duration(const Trajectory& a, const Trajectory& b,
                                      const MetricsConfig& cfg) {
    require_same_grid(a, b);
    std::size_t overlapping = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const SafetyZone za = make_safety_zone(a[i].position, a[i].velocity, a.radius(),
                                               cfg.safety_zone_horizon, cfg.safety_zone_width_factor);
        const SafetyZone zb = make_safety_zone(b[i].position, b[i].velocity, b.radius(),
                                               cfg.safety_zone_horizon, cfg.safety_zone_width_factor);
        if (zones_overlap(za, zb)) ++overlapping;
    }
    return static_cast<double>(overlapping) * a.dt();
}

}  // namespace srnbench
