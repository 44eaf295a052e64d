#include "hgeo/numerics.hpp"

#include <algorithm>
#include <cmath>

#include "hgeo/errors.hpp"

namespace hgeo {

namespace {

double richardson2(double coarse, double fine) {
    // Both stencils are O(h^2); combining h and h/2 cancels the leading term.
    return (4.0 * fine - coarse) / 3.0;
}

double d1_stencil(const ScalarFn& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

double d2_stencil(const ScalarFn& f, double x, double h, double f0) {
    return (f(x + h) - 2.0 * f0 + f(x - h)) / (h * h);
}

double d3_stencil(const ScalarFn& f, double x, double h) {
    return (f(x + 2.0 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2.0 * h)) /
           (2.0 * h * h * h);
}

double d4_stencil(const ScalarFn& f, double x, double h, double f0) {
    return (f(x + 2.0 * h) - 4.0 * f(x + h) + 6.0 * f0 - 4.0 * f(x - h) +
            f(x - 2.0 * h)) / (h * h * h * h);
}

} // namespace

Jet4 numeric_jet2(const ScalarFn& f, double x, const NumericJetSteps& s) {
    Jet4 j;
    j.f = f(x);
    j.d1 = richardson2(d1_stencil(f, x, s.h1), d1_stencil(f, x, s.h1 / 2.0));
    j.d2 = richardson2(d2_stencil(f, x, s.h2, j.f), d2_stencil(f, x, s.h2 / 2.0, j.f));
    return j;
}

Jet4 numeric_jet4(const ScalarFn& f, double x, const NumericJetSteps& s) {
    Jet4 j = numeric_jet2(f, x, s);
    j.d3 = richardson2(d3_stencil(f, x, s.h3), d3_stencil(f, x, s.h3 / 2.0));
    j.d4 = richardson2(d4_stencil(f, x, s.h4, j.f), d4_stencil(f, x, s.h4 / 2.0, j.f));
    return j;
}

double central_d1(const ScalarFn& f, double x, double h) { return d1_stencil(f, x, h); }

double central_d2(const ScalarFn& f, double x, double h) {
    return d2_stencil(f, x, h, f(x));
}

double solve_newton_bisect(const ScalarFn& g, const ScalarFn& dg, double lo,
                           double hi, double rel_tol, int max_iter) {
    double glo = g(lo);
    double ghi = g(hi);
    if (glo > 0.0 || ghi < 0.0)
        throw SolverError("solve_newton_bisect: invalid bracket [" +
                          std::to_string(lo) + ", " + std::to_string(hi) +
                          "] with g = [" + std::to_string(glo) + ", " +
                          std::to_string(ghi) + "]");
    if (glo == 0.0) return lo;
    if (ghi == 0.0) return hi;

    double t = 0.5 * (lo + hi);
    for (int it = 0; it < max_iter; ++it) {
        const double gt = g(t);
        if (gt == 0.0) return t;
        if (gt < 0.0) lo = t; else hi = t;

        const double width = hi - lo;
        if (width <= rel_tol * std::max(1.0, std::abs(hi))) return 0.5 * (lo + hi);

        const double slope = dg(t);
        double tn = (slope != 0.0) ? t - gt / slope : lo - 1.0;  // force bisection
        if (!(tn > lo && tn < hi)) tn = 0.5 * (lo + hi);
        t = tn;
    }
    throw SolverError("solve_newton_bisect: no convergence; bracket [" +
                      std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

double solve_bisect(const ScalarFn& g, double lo, double hi, double rel_tol,
                    int max_iter) {
    double glo = g(lo);
    double ghi = g(hi);
    if (glo == 0.0) return lo;
    if (ghi == 0.0) return hi;
    if ((glo < 0.0) == (ghi < 0.0))
        throw SolverError("solve_bisect: endpoints do not bracket a root");
    for (int it = 0; it < max_iter; ++it) {
        // Secant proposal, guarded to the middle half of the bracket.
        double t = (glo * hi - ghi * lo) / (glo - ghi);
        const double mid = 0.5 * (lo + hi);
        const double quarter = 0.25 * (hi - lo);
        if (!(t > lo + quarter && t < hi - quarter) || (it % 3 == 2)) t = mid;
        const double gt = g(t);
        if (gt == 0.0) return t;
        if ((gt < 0.0) == (glo < 0.0)) { lo = t; glo = gt; }
        else { hi = t; ghi = gt; }
        if (hi - lo <= rel_tol * std::max(1.0, std::abs(hi))) return 0.5 * (lo + hi);
    }
    throw SolverError("solve_bisect: no convergence");
}

ExtrapolatedLimit extrapolate_limit(double v0, double v1, double v2, double ratio) {
    const double d1 = v1 - v0;
    const double d2 = v2 - v1;
    const double scale = std::max({std::abs(v0), std::abs(v1), std::abs(v2), 1e-300});
    if (std::abs(d2) < 1e-13 * scale || std::abs(d1) <= std::abs(d2)) {
        // Already converged, or not behaving like a power law; keep the finest value.
        return {v2, 0.0, false};
    }
    const double rho = d2 / d1;
    if (!(rho > 0.0) || !(rho < 1.0)) return {v2, 0.0, false};
    const double order = -std::log(rho) / std::log(ratio);
    const double limit = v2 + d2 * rho / (1.0 - rho);
    return {limit, order, true};
}

} // namespace hgeo
