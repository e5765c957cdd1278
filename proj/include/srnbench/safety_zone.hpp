#pragma once

#include <algorithm>
#include <array>
#include <cmath>

#include "srnbench/vec2.hpp"

namespace srnbench {

/// Rectangle with arbitrary orientation, described by a base point, a unit
/// axis pointing along its length, the length and the half width. The base
/// point sits at the middle of the rear edge.
struct OrientedRect {
    Vec2 base;
    Vec2 axis;        // unit vector
    double length = 0.0;
    double half_width = 0.0;

    std::array<Vec2, 4> corners() const {
        const Vec2 n = left_normal(axis);
        const Vec2 front = base + axis * length;
        return {base + n * half_width, base - n * half_width,
                front - n * half_width, front + n * half_width};
    }
};

namespace detail {

struct Interval {
    double lo, hi;
};

inline Interval project(const std::array<Vec2, 4>& pts, Vec2 axis) {
    double lo = pts[0].dot(axis), hi = lo;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const double p = pts[i].dot(axis);
        lo = std::min(lo, p);
        hi = std::max(hi, p);
    }
    return {lo, hi};
}

inline bool separated_on(Vec2 axis, const std::array<Vec2, 4>& a, const std::array<Vec2, 4>& b) {
    const Interval ia = project(a, axis);
    const Interval ib = project(b, axis);
    return ia.hi < ib.lo || ib.hi < ia.lo;
}

}  // namespace detail

/// Separating-axis test for two oriented rectangles. Touching counts as overlap.
inline bool rects_overlap(const OrientedRect& a, const OrientedRect& b) {
    const auto ca = a.corners();
    const auto cb = b.corners();
    const std::array<Vec2, 4> axes = {a.axis, left_normal(a.axis), b.axis, left_normal(b.axis)};
    for (Vec2 axis : axes)
        if (detail::separated_on(axis, ca, cb)) return false;
    return true;
}

/// Closest point of a rectangle to q (rectangles are convex, so clamping
/// the local coordinates suffices).
inline Vec2 closest_point_on_rect(const OrientedRect& r, Vec2 q) {
    const Vec2 n = left_normal(r.axis);
    const Vec2 rel = q - r.base;
    const double s = std::clamp(rel.dot(r.axis), 0.0, r.length);
    const double t = std::clamp(rel.dot(n), -r.half_width, r.half_width);
    return r.base + r.axis * s + n * t;
}

inline bool rect_disc_overlap(const OrientedRect& r, Vec2 center, double radius) {
    return distance(closest_point_on_rect(r, center), center) <= radius;
}

/// Velocity-proportional frontal safety zone of one agent: a rectangle of
/// length |v| * horizon ahead of the agent. A stationary agent's zone
/// degenerates to its footprint disc.
struct SafetyZone {
    bool is_disc = false;
    OrientedRect rect;
    Vec2 center;          // disc case
    double disc_radius = 0.0;
};

inline SafetyZone make_safety_zone(Vec2 position, Vec2 velocity, double agent_radius,
                                   double horizon, double width_factor) {
    SafetyZone zone;
    const double speed = velocity.norm();
    if (speed == 0.0) {
        zone.is_disc = true;
        zone.center = position;
        zone.disc_radius = agent_radius;
        return zone;
    }
    zone.rect = OrientedRect{position, velocity / speed, speed * horizon,
                             0.5 * width_factor * agent_radius};
    return zone;
}

inline bool zones_overlap(const SafetyZone& a, const SafetyZone& b) {
    if (a.is_disc && b.is_disc)
        return distance(a.center, b.center) <= a.disc_radius + b.disc_radius;
    if (a.is_disc) return rect_disc_overlap(b.rect, a.center, a.disc_radius);
    if (b.is_disc) return rect_disc_overlap(a.rect, b.center, b.disc_radius);
    return rects_overlap(a.rect, b.rect);
}

}  // namespace srnbench
