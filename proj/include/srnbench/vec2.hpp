#pragma once

#include <cmath>

namespace srnbench {

/// 2D vector. Units depend on context: meters for positions,
/// m/s for velocities, m/s^2 for accelerations.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr bool operator==(const Vec2&) const = default;

    constexpr double dot(Vec2 o) const { return x * o.x + y * o.y; }

    /// z-component of the 3D cross product; signed area spanned with o.
    constexpr double cross(Vec2 o) const { return x * o.y - y * o.x; }

    double norm() const { return std::hypot(x, y); }
    constexpr double norm_sq() const { return x * x + y * y; }

    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }

/// Unit vector along v; {0,0} stays {0,0}.
inline Vec2 normalized(Vec2 v) {
    const double n = v.norm();
    if (n == 0.0) return {0.0, 0.0};
    return v / n;
}

/// 90 degree counter-clockwise rotation of v.
constexpr Vec2 left_normal(Vec2 v) { return {-v.y, v.x}; }

inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

}  // namespace srnbench
