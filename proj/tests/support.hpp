#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "srnbench/trajectory.hpp"

namespace testsupport {

using srnbench::AgentSample;
using srnbench::Trajectory;
using srnbench::Vec2;

/// Independent brute-force oracle for the closest-encounter distance:
/// the minimum of |r + v t| over the grid t = k * step, t in [0, t_max].
///
/// |r + v t| is convex in t, so the global grid minimum lies within one
/// coarse cell of the coarse minimum; scanning that cell on the fine grid
/// returns exactly the full-scan result at a fraction of the cost.
inline double brute_force_pdce(Vec2 r, Vec2 v, double t_max = 100.0, double step = 1e-4) {
    auto dist_at = [&](double t) { return (r + v * t).norm(); };

    const double coarse_step = step * 100.0;
    double best_t = 0.0;
    double best = dist_at(0.0);
    for (double t = 0.0; t <= t_max; t += coarse_step) {
        const double d = dist_at(t);
        if (d < best) {
            best = d;
            best_t = t;
        }
    }
    const long k_lo = std::max(0L, static_cast<long>(std::floor((best_t - coarse_step) / step)));
    const long k_hi =
        std::min(static_cast<long>(std::ceil(t_max / step)),
                 static_cast<long>(std::ceil((best_t + coarse_step) / step)));
    for (long k = k_lo; k <= k_hi; ++k) {
        const double d = dist_at(static_cast<double>(k) * step);
        best = std::min(best, d);
    }
    return best;
}

/// Exhaustive point-based oracle for convex polygon intersection:
/// polygons intersect iff a vertex of one lies inside the other or any
/// pair of edges crosses. Different algorithm family than the SAT.
inline bool point_in_convex(const std::vector<Vec2>& poly, Vec2 p) {
    double side = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Vec2 a = poly[i];
        const Vec2 b = poly[(i + 1) % poly.size()];
        const double c = (b - a).cross(p - a);
        if (std::abs(c) < 1e-12) continue;  // on the edge counts as inside
        if (side == 0.0)
            side = c;
        else if (side * c < 0.0)
            return false;
    }
    return true;
}

inline bool segments_cross(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    const auto orient = [](Vec2 p, Vec2 q, Vec2 r) { return (q - p).cross(r - p); };
    const double o1 = orient(a, b, c), o2 = orient(a, b, d);
    const double o3 = orient(c, d, a), o4 = orient(c, d, b);
    return ((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0));
}

inline bool polygons_intersect_oracle(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
    for (Vec2 p : a)
        if (point_in_convex(b, p)) return true;
    for (Vec2 p : b)
        if (point_in_convex(a, p)) return true;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (segments_cross(a[i], a[(i + 1) % a.size()], b[j], b[(j + 1) % b.size()]))
                return true;
    return false;
}

/// Straight-line trajectory: start position, constant velocity, n samples.
inline Trajectory line_trajectory(const std::string& id, Vec2 start, Vec2 velocity, std::size_t n,
                                  double dt = 0.1, double radius = 0.5, double t0 = 0.0) {
    std::vector<AgentSample> samples(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = t0 + static_cast<double>(k) * dt;
        samples[k] = {t, start + velocity * (static_cast<double>(k) * dt), velocity};
    }
    return Trajectory(id, radius, std::move(samples), dt);
}

/// Trajectory from explicit velocity samples; positions integrated by Euler.
inline Trajectory velocity_trajectory(const std::string& id, Vec2 start,
                                      const std::vector<Vec2>& velocities, double dt = 0.1,
                                      double radius = 0.5) {
    std::vector<AgentSample> samples(velocities.size());
    Vec2 pos = start;
    for (std::size_t k = 0; k < velocities.size(); ++k) {
        samples[k] = {static_cast<double>(k) * dt, pos, velocities[k]};
        pos = pos + velocities[k] * dt;
    }
    return Trajectory(id, radius, std::move(samples), dt);
}

struct Rng {
    std::mt19937 engine;
    explicit Rng(unsigned seed) : engine(seed) {}
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(engine);
    }
    Vec2 vec(double lo, double hi) { return {uniform(lo, hi), uniform(lo, hi)}; }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine); }
};

}  // namespace testsupport
