#pragma once

#include <optional>

#include "hgeo/convex_domain.hpp"
#include "hgeo/finsler.hpp"

namespace hgeo {

/// Second-order data of a curve at one parameter value: point, velocity,
/// acceleration.
struct CurveJet {
    Vec2 c;
    Vec2 c1;
    Vec2 c2;
    enum class Param { arbitrary, arc_length };
    Param tag = Param::arbitrary;
};

/// Vector n with F(x, n) = 1 and g_n(y, n) = 0 for the tangent y it was
/// built for.
struct NormalVector {
    Vec2 n;
};

/// Chern-Rund covariant acceleration in the curve's own parameter:
/// c'' + (Theta(c, c') - Theta(c, -c')) c'.
Vec2 covariant_accel(const ConvexDomain2& dom, const CurveJet& jet);

/// Covariant acceleration of the arc-length reparametrization, computed from
/// an arbitrary-parameter jet. Vanishes on chords; g-orthogonal to the
/// velocity.
Vec2 arclength_accel(const ConvexDomain2& dom, const CurveJet& jet);

/// F(c, arclength_accel); 0 when the acceleration vanishes.
double rund_curvature(const ConvexDomain2& dom, const CurveJet& jet);

/// sqrt(g_{c'}(arclength_accel, arclength_accel)).
double finsler_curvature(const ConvexDomain2& dom, const CurveJet& jet);

/// Solve g_n(y, n) = 0, F(x, n) = 1 by bisection on the direction angle.
/// With `outward_from` set, returns the solution pointing away from that
/// center; otherwise the one making (y, n) positively oriented.
NormalVector unit_normal(const ConvexDomain2& dom, const Vec2& x, const Vec2& y_tangent,
                         const std::optional<Vec2>& outward_from = std::nullopt);

struct NormalCurvature {
    double value;  // sign convention: +coth(r) for circles with outward normal
    double raw;    // g_n(arclength_accel, n) as defined
};
NormalCurvature normal_curvature(const ConvexDomain2& dom, const CurveJet& jet,
                                 const NormalVector& n);

} // namespace hgeo
