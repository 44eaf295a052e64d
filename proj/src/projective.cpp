#include "hgeo/projective.hpp"

#include <cmath>

#include "hgeo/errors.hpp"

namespace hgeo {

namespace {

Mat3 normalized_scale(const Mat3& m) {
    const double s = m.cwiseAbs().maxCoeff();
    if (!(s > 0.0)) throw InputError("projective matrix is zero");
    return m / s;
}

} // namespace

ProjectiveMap2::ProjectiveMap2() : m_(Mat3::Identity()), inv_(Mat3::Identity()) {}

ProjectiveMap2 ProjectiveMap2::identity() { return ProjectiveMap2(); }

ProjectiveMap2 ProjectiveMap2::from_matrix(const Mat3& m) {
    const Mat3 mn = normalized_scale(m);
    if (std::abs(mn.determinant()) < 1e-14)
        throw InputError("projective matrix is singular");
    Mat3 inv = mn.inverse();
    inv = normalized_scale(inv);
    // Polish the inverse once; keeps m * inv within ~1e-15 of a scalar multiple
    // of the identity even for poorly scaled inputs.
    const Mat3 r = mn * inv;
    const double diag = r.trace() / 3.0;
    inv /= diag;
    return ProjectiveMap2(mn, inv);
}

ProjectiveMap2 ProjectiveMap2::affine(const Mat2& linear, const Vec2& offset) {
    Mat3 m = Mat3::Identity();
    m.topLeftCorner<2, 2>() = linear;
    m.topRightCorner<2, 1>() = offset;
    return from_matrix(m);
}

ProjectiveMap2 ProjectiveMap2::translation(const Vec2& offset) {
    return affine(Mat2::Identity(), offset);
}

ProjectiveMap2 ProjectiveMap2::rotation(double angle) {
    Mat2 r;
    r << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
    return affine(r, Vec2::Zero());
}

ProjectiveMap2 ProjectiveMap2::shear_align(double alpha) {
    if (!(std::abs(alpha) < kPi / 2.0))
        throw InputError("shear_align: |alpha| must be < pi/2");
    Mat2 a;
    a << 1.0, -std::tan(alpha), 0.0, 1.0 / std::cos(alpha);
    return affine(a, Vec2::Zero());
}

ProjectiveMap2 ProjectiveMap2::level_far_tangent(double tan_beta, double chord_h) {
    if (!(chord_h > 0.0)) throw InputError("level_far_tangent: chord length must be > 0");
    Mat3 m;
    m << chord_h, 0.0, 0.0,
         0.0, chord_h, 0.0,
         -tan_beta, 0.0, chord_h;
    return from_matrix(m);
}

ProjectiveMap2 ProjectiveMap2::axis_scale(double omega_u, double kappa0) {
    if (!(omega_u > 0.0) || !(kappa0 > 0.0))
        throw InputError("axis_scale: omega_u and kappa0 must be > 0");
    Mat2 a = Mat2::Zero();
    a(0, 0) = 1.0 / omega_u;
    a(1, 1) = 1.0 / (2.0 * omega_u * omega_u * kappa0);
    return affine(a, Vec2::Zero());
}

ProjectiveMap2 ProjectiveMap2::inverse() const { return ProjectiveMap2(inv_, m_); }

ProjectiveMap2 ProjectiveMap2::after(const ProjectiveMap2& first) const {
    return from_matrix(m_ * first.m_);
}

double ProjectiveMap2::denominator(const Vec2& x) const {
    return m_(2, 0) * x.x() + m_(2, 1) * x.y() + m_(2, 2);
}

Vec2 ProjectiveMap2::apply(const Vec2& x) const {
    const double w = denominator(x);
    const double scale = m_.cwiseAbs().maxCoeff() * (1.0 + x.cwiseAbs().maxCoeff());
    if (std::abs(w) < 1e-14 * scale)
        throw HorizonError("projective map applied at its horizon");
    const double u = m_(0, 0) * x.x() + m_(0, 1) * x.y() + m_(0, 2);
    const double v = m_(1, 0) * x.x() + m_(1, 1) * x.y() + m_(1, 2);
    return Vec2(u / w, v / w);
}

Vec2 ProjectiveMap2::pull_back(const Vec2& x) const { return inverse().apply(x); }

Vec2 ProjectiveMap2::differential(const Vec2& x, const Vec2& v) const {
    const double w = denominator(x);
    const double scale = m_.cwiseAbs().maxCoeff() * (1.0 + x.cwiseAbs().maxCoeff());
    if (std::abs(w) < 1e-14 * scale)
        throw HorizonError("projective differential at the horizon");
    const double dw = m_(2, 0) * v.x() + m_(2, 1) * v.y();
    const Vec2 num(m_(0, 0) * x.x() + m_(0, 1) * x.y() + m_(0, 2),
                   m_(1, 0) * x.x() + m_(1, 1) * x.y() + m_(1, 2));
    const Vec2 dnum(m_(0, 0) * v.x() + m_(0, 1) * v.y(),
                    m_(1, 0) * v.x() + m_(1, 1) * v.y());
    return (dnum * w - num * dw) / (w * w);
}

bool ProjectiveMap2::is_affine(double tol) const {
    const double s = m_.cwiseAbs().maxCoeff();
    return std::abs(m_(2, 0)) <= tol * s && std::abs(m_(2, 1)) <= tol * s;
}

} // namespace hgeo
