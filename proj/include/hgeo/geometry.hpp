#pragma once

#include <Eigen/Dense>
#include <cmath>

namespace hgeo {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;

/// Rotate a plane vector by +90 degrees (counterclockwise).
inline Vec2 rot90(const Vec2& v) { return Vec2(-v.y(), v.x()); }

/// z-component of the cross product of two plane vectors.
inline double cross2(const Vec2& a, const Vec2& b) {
    return a.x() * b.y() - a.y() * b.x();
}

inline double angle_of(const Vec2& v) { return std::atan2(v.y(), v.x()); }

inline Vec2 unit_dir(double angle) { return Vec2(std::cos(angle), std::sin(angle)); }

/// Wrap an angle into [-pi, pi).
inline double wrap_angle(double a) {
    a = std::remainder(a, 2.0 * M_PI);
    return a;
}

constexpr double kPi = 3.14159265358979323846;

} // namespace hgeo
