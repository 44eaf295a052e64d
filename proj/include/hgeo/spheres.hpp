#pragma once

#include <string>
#include <vector>

#include "hgeo/connection.hpp"
#include "hgeo/convex_domain.hpp"

namespace hgeo {

/// Frame of a family of metric circles: center o, distinguished boundary
/// point p at phi = 0, e_par the unit vector o -> p and e_perp its +90
/// rotation. Requires the domain to be based at o with ref_dir = e_par.
struct SphereFrame {
    Vec2 o;
    double phi0 = 0.0;
    Vec2 e_par;
    Vec2 e_perp;
    double omega_p;   // omega(0), distance o -> p
    double omega_a;   // omega(pi), distance to the antipodal boundary point

    /// (1 + omega(pi)) / omega(pi); the leading gap coefficient when
    /// omega(0) = 1.
    double c_coefficient() const { return (1.0 + omega_a) / omega_a; }
};

SphereFrame sphere_frame(const ConvexDomain2& dom);

/// Polar function of the metric circle of radius r about the domain's base:
/// rho_r(phi) = a b (e^{2r} - 1) / (a + b e^{2r}) with a = omega(phi) and
/// b = omega(phi + pi).
double sphere_radial(const ConvexDomain2& dom, double r, double phi);
Jet4 sphere_radial_jet(const ConvexDomain2& dom, double r, double phi);

/// Circle point with velocity and acceleration in phi, from the closed-form
/// polar function (analytic where the omega-derivatives are).
CurveJet circle_jet(const ConvexDomain2& dom, double r, double phi);

struct SweepRow {
    double r = 0.0;
    double x2 = 0.0;       // radial gap omega(phi) - rho_r(phi)
    double k_n = 0.0;
    double k_r = 0.0;
    double k_f = 0.0;
    double gap_err = 0.0;  // |x2 e^{2r} - omega(phi)(omega(phi)/omega(phi+pi) + 1)|
    bool ok = false;
    std::string note;
};

struct SweepTable {
    double phi = 0.0;
    std::vector<SweepRow> rows;
};

/// Per radius: circle jet, the three curvatures (normal curvature with the
/// outward-normal sign convention), and the boundary gap. Conditioning
/// failures are recorded per row, not fatal.
SweepTable curvature_sweep(const ConvexDomain2& dom, const std::vector<double>& r_grid,
                           double phi);

enum class SweepColumn { normal, rund, finsler, rund_sq, finsler_sq };
double sweep_value(const SweepRow& row, SweepColumn column);
std::string column_name(SweepColumn column);

struct AsymptoticFit {
    double limit = 1.0;
    double coeff = 0.0;        // A in k(r) ~ limit + A e^{-rate r}
    double rate = 0.0;
    double rms_log_residual = 0.0;
    double r_lo = 0.0;
    double r_hi = 0.0;
    int points = 0;
};

/// Linear regression of log|k(r) - limit| against r over the rows inside
/// [r_lo, r_hi]; refuses windows with fewer than 4 usable points.
AsymptoticFit fit_exponential_approach(const SweepTable& table, SweepColumn column,
                                       double r_lo, double r_hi, double limit = 1.0);

/// Closed-form e^{-2r} coefficients for the three curvatures of circles in a
/// normalized domain (f2 = 1/2 at p).
struct Predictions {
    double c = 0.0;        // (1 + omega(pi)) / omega(pi)
    double chord_h = 0.0;  // axis chord length through p
    double l_chord = 0.0;  // chord length through p in direction (f3, -1/2)
    double f3 = 0.0;
    double f4 = 0.0;
    double a_normal = 0.0;      // c (1/H - 8 f3^2 / 9)
    double a_rund_sq = 0.0;     // c (2/L - 8 f3^2 / 9)
    double a_finsler_sq = 0.0;  // c (-8 f3^2 / 9 + 4 f4)
};

Predictions predicted_coefficients(const ConvexDomain2& normalized_dom);

/// One scaled-residual (or exact-identity) check of the near-boundary series
/// behavior, evaluated on a decreasing x2 sequence with Aitken extrapolation.
struct ExpansionReport {
    std::string id;
    std::vector<double> x2;
    std::vector<double> measured;  // scaled quantity (or residual for exact checks)
    double target = 0.0;
    double extrapolated = 0.0;     // = max residual for exact checks
    double order = 0.0;            // empirical convergence order (asymptotic checks)
    bool exact = false;
    bool applicable = true;
    std::string note;
};

/// Known ids: T_LEAD, T_X2COEF, F_LEAD, F_SQRT_COEF, THRAZN, G11_LEAD,
/// G12_LEAD, G22_LEAD, F2_EXACT, GARB_EXACT, FL_LEAD.
ExpansionReport expansion_check(const ConvexDomain2& normalized_dom,
                                const std::string& check_id,
                                const std::vector<double>& x2_sequence);

const std::vector<std::string>& expansion_check_ids();

} // namespace hgeo
