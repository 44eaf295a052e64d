#include "hgeo/connection.hpp"

#include <cmath>

#include "hgeo/errors.hpp"
#include "hgeo/numerics.hpp"

namespace hgeo {

Vec2 covariant_accel(const ConvexDomain2& dom, const CurveJet& jet) {
    const double tp = funk(dom, jet.c, jet.c1);
    const double tm = funk(dom, jet.c, Vec2(-jet.c1));
    return jet.c2 + (tp - tm) * jet.c1;
}

Vec2 arclength_accel(const ConvexDomain2& dom, const CurveJet& jet) {
    const double theta_p = funk(dom, jet.c, jet.c1);
    const double theta_m = funk(dom, jet.c, Vec2(-jet.c1));
    const double f = 0.5 * (theta_p + theta_m);
    const SymMatrix2 g = fundamental_tensor(dom, jet.c, jet.c1);
    const Vec2 nabla = jet.c2 + (theta_p - theta_m) * jet.c1;
    const double lambda = theta_p - theta_m - g.quad(nabla, jet.c1) / (f * f);
    return (jet.c2 + lambda * jet.c1) / (f * f);
}

double rund_curvature(const ConvexDomain2& dom, const CurveJet& jet) {
    const Vec2 a = arclength_accel(dom, jet);
    if (a.norm() < 1e-12) return 0.0;
    return hilbert_norm(dom, jet.c, a);
}

double finsler_curvature(const ConvexDomain2& dom, const CurveJet& jet) {
    const Vec2 a = arclength_accel(dom, jet);
    if (a.norm() < 1e-12) return 0.0;
    const SymMatrix2 g = fundamental_tensor(dom, jet.c, jet.c1);
    return std::sqrt(std::max(0.0, g.quad(a, a)));
}

NormalVector unit_normal(const ConvexDomain2& dom, const Vec2& x, const Vec2& y_tangent,
                         const std::optional<Vec2>& outward_from) {
    if (!(y_tangent.norm() > 0.0)) throw InputError("unit_normal: zero tangent");
    const double psi_y = angle_of(y_tangent);

    auto h = [&](double psi) {
        const Vec2 n(std::cos(psi), std::sin(psi));
        return fundamental_tensor(dom, x, n).quad(y_tangent, n);
    };
    // h > 0 at psi_y (g_y(y,y) = F^2) and < 0 at psi_y + pi; strict convexity
    // of the unit ball gives exactly one root between them.
    const double psi = solve_bisect(h, psi_y, psi_y + kPi, 1e-13);

    Vec2 n(std::cos(psi), std::sin(psi));
    if (outward_from && (x - *outward_from).dot(n) < 0.0) n = -n;
    const double f = hilbert_norm(dom, x, n);
    return NormalVector{n / f};
}

NormalCurvature normal_curvature(const ConvexDomain2& dom, const CurveJet& jet,
                                 const NormalVector& n) {
    const Vec2 a = arclength_accel(dom, jet);
    const SymMatrix2 g = fundamental_tensor(dom, jet.c, n.n);
    const double raw = g.quad(a, n.n);
    return {-raw, raw};
}

} // namespace hgeo
