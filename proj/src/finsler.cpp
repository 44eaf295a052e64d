#include "hgeo/finsler.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "hgeo/errors.hpp"

namespace hgeo {

double SymMatrix2::min_eigenvalue() const {
    const double tr = g11 + g22;
    const double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - det()));
    return tr / 2.0 - disc;
}

double funk(const ConvexDomain2& dom, const Vec2& x, const Vec2& y) {
    const RayHit hit = dom.ray_exit(x, y);
    return y.norm() / (hit.point - x).norm();
}

double hilbert_norm(const ConvexDomain2& dom, const Vec2& x, const Vec2& y) {
    return 0.5 * (funk(dom, x, y) + funk(dom, x, Vec2(-y)));
}

FunkJet funk_jet(const ConvexDomain2& dom, const Vec2& x, const Vec2& y) {
    const RayHit hit = dom.ray_exit(x, y);
    const double ny = y.norm();
    if (hit.t * ny < 1e-6 * dom.diameter())
        throw ConditioningError("funk_jet: query point too close to the boundary");

    // One radial jet at the exit angle supplies the tangent frame and the
    // curvature together (the jet is a root-solve per evaluation on mapped
    // domains, so it is not fetched twice).
    const double phi_e = dom.phi_of(hit.point);
    const Jet4 w = dom.omega_jet2(phi_e);
    const Vec2 d = dom.direction(phi_e);
    const Vec2 tangent = (w.d1 * d + w.f * rot90(d)).normalized();
    const Vec2 n_in = rot90(tangent);
    const double kappa = (w.f * w.f + 2.0 * w.d1 * w.d1 - w.f * w.d2) /
                         std::pow(w.f * w.f + w.d1 * w.d1, 1.5);
    if (!(kappa > 0.0))
        throw DomainError("funk_jet: non-convex boundary data at the exit point");

    const double y1 = y.dot(tangent);
    const double y2 = y.dot(n_in);
    if (!(y2 < -1e-10 * ny))
        throw ConditioningError("funk_jet: ray exits tangentially to the boundary");

    // In the exit-tangent frame the boundary graph has f' = 0, f'' = kappa, so
    // the implicit derivatives of the exit parameter collapse to
    //   grad t = (0, -1/y2),   hess t = (kappa / y2) * v v^T,  v = (1, -y1/y2).
    FunkJet out;
    out.t = hit.t;
    out.exit = hit.point;
    out.grad_t = n_in * (-1.0 / y2);
    const Vec2 v = tangent - (y1 / y2) * n_in;
    out.hess_t = (kappa / y2) * (v * v.transpose());

    const double t = hit.t;
    out.theta = 1.0 / t;
    out.d_theta = -out.grad_t / (t * t);
    out.dd_theta = (2.0 * out.grad_t * out.grad_t.transpose() - t * out.hess_t) /
                   (t * t * t);
    return out;
}

Vec2 okada_residual(const ConvexDomain2& dom, const Vec2& x, const Vec2& y) {
    const FunkJet j = funk_jet(dom, x, y);
    const double h = 5e-5 * y.norm();
    Vec2 res;
    for (int k = 0; k < 2; ++k) {
        Vec2 yp = y, ym = y;
        yp[k] += h;
        ym[k] -= h;
        const double theta_yk = (funk(dom, x, yp) - funk(dom, x, ym)) / (2.0 * h);
        res[k] = j.d_theta[k] - j.theta * theta_yk;
    }
    return res;
}

SymMatrix2 fundamental_tensor(const ConvexDomain2& dom, const Vec2& x, const Vec2& y) {
    const FunkJet p = funk_jet(dom, x, y);
    const FunkJet m = funk_jet(dom, x, Vec2(-y));
    const double f = 0.5 * (p.theta + m.theta);
    const Vec2 delta = p.grad_t / p.t - m.grad_t / m.t;
    const Mat2 g = -0.5 * f * (p.hess_t + m.hess_t) +
                   0.25 * (delta * delta.transpose());
    return {g(0, 0), 0.5 * (g(0, 1) + g(1, 0)), g(1, 1)};
}

SymMatrix2 fundamental_tensor_fd(const ConvexDomain2& dom, const Vec2& x, const Vec2& y) {
    auto half_f2 = [&](const Vec2& v) {
        const double f = hilbert_norm(dom, x, v);
        return 0.5 * f * f;
    };
    const double h = 5e-3 * y.norm();

    auto diag = [&](int k, double hh) {
        Vec2 yp = y, ym = y;
        yp[k] += hh;
        ym[k] -= hh;
        return (half_f2(yp) - 2.0 * half_f2(y) + half_f2(ym)) / (hh * hh);
    };
    auto cross = [&](double hh) {
        Vec2 pp = y, pm = y, mp = y, mm = y;
        pp += Vec2(hh, hh);
        pm += Vec2(hh, -hh);
        mp += Vec2(-hh, hh);
        mm += Vec2(-hh, -hh);
        return (half_f2(pp) - half_f2(pm) - half_f2(mp) + half_f2(mm)) /
               (4.0 * hh * hh);
    };
    auto richardson = [](double coarse, double fine) {
        return (4.0 * fine - coarse) / 3.0;
    };

    SymMatrix2 g;
    g.g11 = richardson(diag(0, h), diag(0, h / 2.0));
    g.g22 = richardson(diag(1, h), diag(1, h / 2.0));
    g.g12 = richardson(cross(h), cross(h / 2.0));
    return g;
}

double hilbert_distance(const ConvexDomain2& dom, const Vec2& a, const Vec2& b) {
    if (!dom.contains(a) || !dom.contains(b))
        throw DomainError("hilbert_distance: endpoints must be interior");
    const Vec2 y = b - a;
    if (y.norm() < 1e-15 * dom.diameter()) return 0.0;
    const Vec2 x_plus = dom.ray_exit(a, y).point;    // beyond b
    const Vec2 x_minus = dom.ray_exit(a, Vec2(-y)).point;  // behind a
    const double num = (b - x_minus).norm() * (a - x_plus).norm();
    const double den = (a - x_minus).norm() * (b - x_plus).norm();
    return 0.5 * std::log(num / den);
}

double distance_by_quadrature(const ConvexDomain2& dom, const Vec2& a, const Vec2& b,
                              double tol) {
    if (!dom.contains(a) || !dom.contains(b))
        throw DomainError("distance_by_quadrature: endpoints must be interior");
    const Vec2 y = b - a;
    if (y.norm() < 1e-15 * dom.diameter()) return 0.0;
    auto integrand = [&](double t) { return hilbert_norm(dom, a + t * y, y); };
    double error = 0.0;
    const double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        integrand, 0.0, 1.0, 12, tol, &error);
    if (!(error <= 100.0 * tol * std::max(1.0, value)))
        throw SolverError("distance quadrature did not converge near the boundary");
    return value;
}

} // namespace hgeo
