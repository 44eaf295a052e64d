#pragma once

#include "hgeo/convex_domain.hpp"
#include "hgeo/geometry.hpp"

namespace hgeo {

struct SymMatrix2 {
    double g11 = 0.0;
    double g12 = 0.0;
    double g22 = 0.0;

    Mat2 matrix() const {
        Mat2 m;
        m << g11, g12, g12, g22;
        return m;
    }
    double quad(const Vec2& u, const Vec2& v) const {
        return g11 * u.x() * v.x() + g12 * (u.x() * v.y() + u.y() * v.x()) +
               g22 * u.y() * v.y();
    }
    double det() const { return g11 * g22 - g12 * g12; }
    double min_eigenvalue() const;
};

/// Funk metric value Theta and its first and second derivatives in the
/// base-point coordinates, together with the ray-exit parameter data they are
/// assembled from (Theta = 1/t).
struct FunkJet {
    double theta = 0.0;
    Vec2 d_theta = Vec2::Zero();
    Mat2 dd_theta = Mat2::Zero();
    double t = 0.0;
    Vec2 grad_t = Vec2::Zero();
    Mat2 hess_t = Mat2::Zero();
    Vec2 exit = Vec2::Zero();
};

/// Theta(x, y) = |y| / |x - x_plus|.
double funk(const ConvexDomain2& dom, const Vec2& x, const Vec2& y);

/// F(x, y) = (Theta(x, y) + Theta(x, -y)) / 2.
double hilbert_norm(const ConvexDomain2& dom, const Vec2& x, const Vec2& y);

/// Theta with exact first/second x-derivatives via implicit differentiation
/// of the ray-exit parameter, evaluated in the exit-tangent frame where the
/// boundary graph has zero slope (this removes the formulas' artificial
/// singularity at y2 = y1 f').
FunkJet funk_jet(const ConvexDomain2& dom, const Vec2& x, const Vec2& y);

/// Theta_{x^k} - Theta * Theta_{y^k} for k = 1, 2; vanishes for Funk metrics.
/// The fiber derivatives are taken by central differences.
Vec2 okada_residual(const ConvexDomain2& dom, const Vec2& x, const Vec2& y);

/// Fundamental tensor g_ij(x, y) assembled from the Funk jets at (x, y) and
/// (x, -y).
SymMatrix2 fundamental_tensor(const ConvexDomain2& dom, const Vec2& x, const Vec2& y);

/// Independent oracle: Hessian in y of F^2/2 by Richardson-extrapolated
/// central differences.
SymMatrix2 fundamental_tensor_fd(const ConvexDomain2& dom, const Vec2& x, const Vec2& y);

/// Cross-ratio distance along the chord through a and b.
double hilbert_distance(const ConvexDomain2& dom, const Vec2& a, const Vec2& b);

/// Oracle: adaptive quadrature of F along the segment from a to b.
double distance_by_quadrature(const ConvexDomain2& dom, const Vec2& a, const Vec2& b,
                              double tol = 1e-10);

} // namespace hgeo
