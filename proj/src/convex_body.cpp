#include "hgeo/convex_body.hpp"

#include <cmath>

#include "hgeo/errors.hpp"

namespace hgeo {

ConvexBody3::ConvexBody3(const Mat3& form, const Vec3& center) : m_(form), c_(center) {
    const Mat3 sym = 0.5 * (m_ + m_.transpose());
    m_ = sym;
    Eigen::SelfAdjointEigenSolver<Mat3> es(m_);
    if (!(es.eigenvalues().minCoeff() > 0.0))
        throw InputError("body form must be positive definite");
}

ConvexBody3 ConvexBody3::ball(const Vec3& center, double radius) {
    if (!(radius > 0.0)) throw InputError("ball radius must be > 0");
    return ConvexBody3(Mat3::Identity() / (radius * radius), center);
}

ConvexBody3 ConvexBody3::ellipsoid(const Vec3& center, const Vec3& semi_axes) {
    if (!(semi_axes.minCoeff() > 0.0))
        throw InputError("ellipsoid semi-axes must be > 0");
    Mat3 m = Mat3::Zero();
    for (int i = 0; i < 3; ++i) m(i, i) = 1.0 / (semi_axes[i] * semi_axes[i]);
    return ConvexBody3(m, center);
}

bool ConvexBody3::contains(const Vec3& x) const {
    const Vec3 w = x - c_;
    return w.dot(m_ * w) < 1.0;
}

double ConvexBody3::radial(const Vec3& from, const Vec3& dir) const {
    const Vec3 w = from - c_;
    const double q2 = dir.dot(m_ * dir);
    const double q1 = dir.dot(m_ * w);
    const double q0 = w.dot(m_ * w) - 1.0;
    const double disc = q1 * q1 - q2 * q0;
    if (!(disc > 0.0)) throw SolverError("body ray has no forward exit");
    return (-q1 + std::sqrt(disc)) / q2;
}

ConvexDomain2 planar_section(const ConvexBody3& body, const Vec3& o, const Vec3& span_u,
                             const Vec3& span_v, const std::string& tag) {
    if (!body.contains(o)) throw DomainError("section point is not interior to the body");
    const double nu = span_u.norm();
    if (!(nu > 0.0)) throw InputError("degenerate section span");
    const Vec3 u = span_u / nu;
    Vec3 v = span_v - span_v.dot(u) * u;
    const double nv = v.norm();
    if (!(nv > 1e-12 * span_v.norm()) || !(span_v.norm() > 0.0))
        throw InputError("degenerate section span");
    v /= nv;

    // Restrict the quadric to the plane o + a*u + b*v.
    const Mat3& m = body.form();
    const Vec3 w = o - body.center();
    Mat2 q;
    q << u.dot(m * u), u.dot(m * v), v.dot(m * u), v.dot(m * v);
    const Vec2 lin(u.dot(m * w), v.dot(m * w));
    const double c0 = w.dot(m * w);

    // Complete the square: (z - center)^T q (z - center) < 1 - value_at_center.
    const Vec2 center = -q.inverse() * lin;
    const double v0 = c0 + lin.dot(center);
    if (!(v0 < 1.0)) throw SolverError("planar section is degenerate");
    const Mat2 form = q / (1.0 - v0);
    return ConvexDomain2::quadric(form, center, Vec2::Zero(), Vec2(1.0, 0.0), tag);
}

} // namespace hgeo
