#pragma once

#include <algorithm>
#include <vector>

#include "srnbench/trajectory.hpp"

namespace srnbench {

/// Min/avg/max of speed, acceleration magnitude and jerk magnitude.
struct KinematicSummary {
    double v_min = 0.0, v_avg = 0.0, v_max = 0.0;  // m/s
    double a_min = 0.0, a_avg = 0.0, a_max = 0.0;  // m/s^2
    double j_min = 0.0, j_avg = 0.0, j_max = 0.0;  // m/s^3
};

namespace detail {

struct Stats {
    double min = 0.0, avg = 0.0, max = 0.0;
};

inline Stats stats_of(const std::vector<double>& xs) {
    if (xs.empty()) return {};
    Stats s{xs.front(), 0.0, xs.front()};
    double sum = 0.0;
    for (double x : xs) {
        s.min = std::min(s.min, x);
        s.max = std::max(s.max, x);
        sum += x;
    }
    s.avg = sum / static_cast<double>(xs.size());
    return s;
}

}  // namespace detail

/// Motion statistics of a single trajectory.
///
/// Speed is |v| per sample. Acceleration is the central difference of the
/// velocity vector, jerk the central difference of that acceleration vector;
/// both enter the statistics as magnitudes and only at samples with a complete
/// stencil, so boundary samples never contribute spurious spikes. A turning
/// agent at constant speed therefore still registers nonzero acceleration.
inline KinematicSummary kinematic_summary(const Trajectory& traj) {
    const auto& s = traj.samples();
    const std::size_t n = s.size();
    if (n < 4)
        throw ValidationError("kinematic_summary: needs at least 4 samples, got " +
                              std::to_string(n));
    const double dt = traj.dt();

    std::vector<double> speed(n);
    for (std::size_t i = 0; i < n; ++i) speed[i] = s[i].velocity.norm();

    // accel[k] is the vector central difference at sample k+1.
    std::vector<Vec2> accel(n - 2);
    std::vector<double> accel_mag(n - 2);
    for (std::size_t k = 1; k + 1 < n; ++k) {
        accel[k - 1] = (s[k + 1].velocity - s[k - 1].velocity) / (2.0 * dt);
        accel_mag[k - 1] = accel[k - 1].norm();
    }

    std::vector<double> jerk_mag;
    if (accel.size() >= 3) {
        jerk_mag.resize(accel.size() - 2);
        for (std::size_t k = 1; k + 1 < accel.size(); ++k)
            jerk_mag[k - 1] = ((accel[k + 1] - accel[k - 1]) / (2.0 * dt)).norm();
    }

    const auto v = detail::stats_of(speed);
    const auto a = detail::stats_of(accel_mag);
    const auto j = detail::stats_of(jerk_mag);
    return {v.min, v.avg, v.max, a.min, a.avg, a.max, j.min, j.avg, j.max};
}

}  // namespace srnbench
