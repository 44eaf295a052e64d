#pragma once

#include <string>

#include "hgeo/convex_domain.hpp"
#include "hgeo/geometry.hpp"

namespace hgeo {

/// Bounded convex body (x-c)^T M (x-c) < 1 in three-space, M symmetric
/// positive definite. Planar sections through interior points are radially
/// convex, which is all the sphere machinery needs.
class ConvexBody3 {
public:
    static ConvexBody3 ball(const Vec3& center, double radius);
    static ConvexBody3 ellipsoid(const Vec3& center, const Vec3& semi_axes);

    bool contains(const Vec3& x) const;
    /// Exit distance from an interior point along a direction.
    double radial(const Vec3& from, const Vec3& dir) const;

    const Vec3& center() const { return c_; }
    const Mat3& form() const { return m_; }

private:
    ConvexBody3(const Mat3& form, const Vec3& center);

    Mat3 m_;
    Vec3 c_;
};

/// The 2D domain cut by the plane o + span(u, v), as a radial function about
/// o in the orthonormalized (u, v) frame (o maps to the section origin; the
/// normalized u direction maps to the section x-axis).
ConvexDomain2 planar_section(const ConvexBody3& body, const Vec3& o, const Vec3& span_u,
                             const Vec3& span_v, const std::string& tag = "section");

} // namespace hgeo
