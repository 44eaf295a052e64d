#pragma once

#include <functional>

#include "hgeo/jet.hpp"

namespace hgeo {

using ScalarFn = std::function<double(double)>;

/// Central-difference derivatives of orders 1..4 with one Richardson step
/// (halved step, O(h^4) effective truncation). Step sizes are chosen per
/// order so that the solver noise floor of the evaluated function (~1e-13
/// relative) does not dominate the higher stencils.
struct NumericJetSteps {
    double h1 = 1.0e-4;
    double h2 = 3.0e-3;
    double h3 = 1.0e-2;
    double h4 = 3.0e-2;
};

Jet4 numeric_jet4(const ScalarFn& f, double x, const NumericJetSteps& steps = {});

/// Orders 0..2 only (d3 = d4 = 0); cheaper for curvature-type queries.
Jet4 numeric_jet2(const ScalarFn& f, double x, const NumericJetSteps& steps = {});

/// Plain central first/second derivatives without Richardson (test oracles).
double central_d1(const ScalarFn& f, double x, double h);
double central_d2(const ScalarFn& f, double x, double h);

/// Safeguarded Newton iteration on a bracket [lo, hi] with g(lo) < 0 < g(hi).
/// Falls back to bisection whenever a Newton step leaves the bracket or fails
/// to shrink it. Converges to relative tolerance rel_tol on the root.
double solve_newton_bisect(const ScalarFn& g, const ScalarFn& dg, double lo,
                           double hi, double rel_tol = 1e-13, int max_iter = 200);

/// Derivative-free bracket solve (bisection with secant acceleration).
double solve_bisect(const ScalarFn& g, double lo, double hi,
                    double rel_tol = 1e-13, int max_iter = 300);

/// Limit of a sequence v(x) = L + c x^q sampled at x, x/ratio, x/ratio^2
/// (Aitken form). Returns the extrapolated limit and the empirical order q;
/// falls back to the last value when the differences are at the noise floor.
struct ExtrapolatedLimit {
    double limit;
    double order;
    bool extrapolated;
};
ExtrapolatedLimit extrapolate_limit(double v0, double v1, double v2, double ratio);

} // namespace hgeo
