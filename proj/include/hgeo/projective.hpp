#pragma once

#include <Eigen/Dense>

#include "hgeo/geometry.hpp"

namespace hgeo {

/// Plane projective transformation stored as a homogeneous 3x3 matrix acting
/// on (x1, x2, 1), together with its exact inverse. The last row encodes the
/// projective denominator. Maps are immutable after construction.
class ProjectiveMap2 {
public:
    ProjectiveMap2();  // identity

    static ProjectiveMap2 identity();
    static ProjectiveMap2 from_matrix(const Mat3& m);
    static ProjectiveMap2 affine(const Mat2& linear, const Vec2& offset);
    static ProjectiveMap2 translation(const Vec2& offset);
    static ProjectiveMap2 rotation(double angle);

    /// x1' = x1 - tan(alpha) x2, x2' = x2 / cos(alpha). Turns the direction at
    /// angle alpha from the x2-axis into the x2-axis itself while fixing the
    /// x1-axis pointwise. Requires |alpha| < pi/2.
    static ProjectiveMap2 shear_align(double alpha);

    /// x' = H x / (H - tan(beta) x1). Fixes (0,0) and (0,H) and levels the
    /// boundary tangent at (0,H) whose slope was -tan(beta). Requires H > 0.
    static ProjectiveMap2 level_far_tangent(double tan_beta, double chord_h);

    /// Diagonal scaling x1' = x1 / omega_u, x2' = x2 / (2 omega_u^2 kappa0).
    /// Requires positive inputs.
    static ProjectiveMap2 axis_scale(double omega_u, double kappa0);

    const Mat3& matrix() const { return m_; }
    const Mat3& inverse_matrix() const { return inv_; }

    ProjectiveMap2 inverse() const;
    /// Composition: (second.after(*this))(x) == second(this->apply(x)).
    ProjectiveMap2 after(const ProjectiveMap2& first) const;

    double denominator(const Vec2& x) const;
    Vec2 apply(const Vec2& x) const;          // throws HorizonError at the horizon
    Vec2 pull_back(const Vec2& x) const;      // apply the inverse

    /// Differential of the map at x applied to a direction v.
    Vec2 differential(const Vec2& x, const Vec2& v) const;

    bool is_affine(double tol = 1e-14) const;

private:
    ProjectiveMap2(const Mat3& m, const Mat3& inv) : m_(m), inv_(inv) {}

    Mat3 m_;
    Mat3 inv_;
};

} // namespace hgeo
