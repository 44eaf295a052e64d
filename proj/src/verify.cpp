#include "hgeo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "hgeo/connection.hpp"
#include "hgeo/errors.hpp"
#include "hgeo/finsler.hpp"
#include "hgeo/normalization.hpp"
#include "hgeo/rng.hpp"

namespace hgeo {

namespace {

Vec2 random_interior(const ConvexDomain2& dom, Rng& rng, double fill = 0.85) {
    const double phi = rng.uniform(0.0, 2.0 * kPi);
    const double r = fill * std::sqrt(rng.uniform());
    return dom.base_point() + r * dom.omega(phi) * dom.direction(phi);
}

Vec2 random_dir(Rng& rng) {
    const double a = rng.uniform(0.0, 2.0 * kPi);
    return {std::cos(a), std::sin(a)};
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = n == 1 ? hi : lo + (hi - lo) * i / (n - 1);
    return v;
}

/// Runs the body, converting any library error into a failed check.
void guarded(VerificationReport& rep, const std::string& id,
             const std::function<void()>& body) {
    try {
        body();
    } catch (const Error& e) {
        rep.add_pass_fail(id, false, std::numeric_limits<double>::quiet_NaN(), 0.0, 0.0,
                          std::string("error: ") + e.what());
    }
}

struct SuiteContext {
    const ConvexDomain2& dom;
    const SuiteOptions& opt;
    VerificationReport& rep;
    std::optional<NormalizationResult> normalization;
    std::optional<SweepTable> main_sweep;

    const NormalizationResult& normalized() {
        if (!normalization)
            normalization = normalize(dom, dom.base_point(), 0.0);
        return *normalization;
    }

    const SweepTable& sweep() {
        if (!main_sweep)
            main_sweep = curvature_sweep(
                dom, linspace(opt.r_min, opt.r_max, opt.steps), opt.phi);
        return *main_sweep;
    }
};

void run_geometry(SuiteContext& ctx) {
    const ConvexDomain2& dom = ctx.dom;
    VerificationReport& rep = ctx.rep;
    Rng rng = Rng(ctx.opt.seed).split(1);

    guarded(rep, "geometry.exit_residual", [&] {
        double worst = 0.0;
        for (int i = 0; i < 300; ++i) {
            const Vec2 x = random_interior(dom, rng);
            const RayHit hit = dom.ray_exit(x, random_dir(rng));
            const double res = std::abs((hit.point - dom.base_point()).norm() -
                                        dom.omega(dom.phi_of(hit.point)));
            worst = std::max(worst, res);
        }
        const double bound = 1e-10 * dom.diameter();
        rep.add_pass_fail("geometry.exit_residual", worst < bound, worst, bound, bound);
    });

    guarded(rep, "geometry.chord_swap", [&] {
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const Vec2 x = random_interior(dom, rng);
            const Vec2 y = random_dir(rng);
            const ChordInfo a = dom.chord(x, y);
            const ChordInfo b = dom.chord(x, Vec2(-y));
            worst = std::max(worst, (a.x_plus - b.x_minus).norm());
            worst = std::max(worst, (a.x_minus - b.x_plus).norm());
        }
        const double bound = 1e-12 * dom.diameter();
        rep.add_pass_fail("geometry.chord_swap", worst < bound, worst, bound, bound);
    });

    guarded(rep, "geometry.curvature_positive", [&] {
        double kmin = std::numeric_limits<double>::infinity();
        for (int i = 0; i < 512; ++i)
            kmin = std::min(kmin, dom.boundary_curvature(2.0 * kPi * i / 512));
        rep.add_pass_fail("geometry.curvature_positive", kmin > 0.0, kmin, 0.0, 0.0);
    });

    guarded(rep, "geometry.graph_jet_curvature", [&] {
        double worst = 0.0;
        for (int i = 0; i < 64; ++i) {
            const double phi = 2.0 * kPi * i / 64;
            const BoundaryJet j = dom.graph_jet(phi);
            const double kappa = dom.boundary_curvature(phi);
            worst = std::max(worst, std::abs(j.f2 - kappa) / kappa);
            worst = std::max(worst, std::abs(j.f1));
        }
        rep.add_pass_fail("geometry.graph_jet_curvature", worst < 1e-6, worst, 1e-6, 1e-6);
    });

    guarded(rep, "geometry.angle_bound", [&] {
        const AngleBoundReport ab = dom.angle_cosine_bound(dom.base_point(), 512);
        rep.add_pass_fail("geometry.angle_bound", ab.satisfied, ab.min_cos, ab.bound,
                          1e-8, "min cos vs omega0*kappa_min");
    });
}

void run_metric(SuiteContext& ctx) {
    const ConvexDomain2& dom = ctx.dom;
    VerificationReport& rep = ctx.rep;
    Rng rng = Rng(ctx.opt.seed).split(2);

    guarded(rep, "metric.homogeneity", [&] {
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const Vec2 x = random_interior(dom, rng);
            const Vec2 y = random_dir(rng);
            const double lambda = rng.uniform(0.1, 10.0);
            const double f = hilbert_norm(dom, x, y);
            worst = std::max(worst,
                             std::abs(hilbert_norm(dom, x, lambda * y) - lambda * f) /
                                 (lambda * f));
        }
        rep.add_pass_fail("metric.homogeneity", worst < 1e-12, worst, 1e-12, 1e-12);
    });

    guarded(rep, "metric.reversibility", [&] {
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const Vec2 x = random_interior(dom, rng);
            const Vec2 y = random_dir(rng);
            const double f = hilbert_norm(dom, x, y);
            worst = std::max(worst, std::abs(hilbert_norm(dom, x, Vec2(-y)) - f) / f);
        }
        rep.add_pass_fail("metric.reversibility", worst < 1e-12, worst, 1e-12, 1e-12);
    });

    guarded(rep, "metric.okada_residual", [&] {
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const Vec2 x = random_interior(dom, rng);
            const Vec2 y = random_dir(rng);
            worst = std::max(worst, okada_residual(dom, x, y).lpNorm<Eigen::Infinity>());
        }
        rep.add_pass_fail("metric.okada_residual", worst < 1e-6, worst, 1e-6, 1e-6,
                          "sup over 1000 seeded samples");
    });

    guarded(rep, "metric.positive_definite", [&] {
        double min_ev = std::numeric_limits<double>::infinity();
        for (int i = 0; i < 100; ++i) {
            const Vec2 x = random_interior(dom, rng);
            const SymMatrix2 g = fundamental_tensor(dom, x, random_dir(rng));
            min_ev = std::min(min_ev, g.min_eigenvalue());
        }
        rep.add_pass_fail("metric.positive_definite", min_ev > 0.0, min_ev, 0.0, 0.0);
    });

    guarded(rep, "metric.euler_identity", [&] {
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const Vec2 x = random_interior(dom, rng);
            const Vec2 y = random_dir(rng);
            const double f2 = std::pow(hilbert_norm(dom, x, y), 2);
            worst = std::max(worst,
                             std::abs(fundamental_tensor(dom, x, y).quad(y, y) - f2) / f2);
        }
        rep.add_pass_fail("metric.euler_identity", worst < 1e-8, worst, 1e-8, 1e-8);
    });

    guarded(rep, "metric.tensor_vs_fd", [&] {
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const Vec2 x = random_interior(dom, rng, 0.8);
            const Vec2 y = random_dir(rng);
            const SymMatrix2 a = fundamental_tensor(dom, x, y);
            const SymMatrix2 b = fundamental_tensor_fd(dom, x, y);
            const double scale = std::max(std::abs(a.g11), std::abs(a.g22));
            worst = std::max({worst, std::abs(a.g11 - b.g11) / scale,
                              std::abs(a.g12 - b.g12) / scale,
                              std::abs(a.g22 - b.g22) / scale});
        }
        rep.add_pass_fail("metric.tensor_vs_fd", worst < 1e-6, worst, 1e-6, 1e-6,
                          "100 seeded samples, implicit formula vs FD Hessian");
    });

    guarded(rep, "metric.distance_oracle", [&] {
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const Vec2 a = random_interior(dom, rng, 0.8);
            const Vec2 b = random_interior(dom, rng, 0.8);
            worst = std::max(worst, std::abs(hilbert_distance(dom, a, b) -
                                             distance_by_quadrature(dom, a, b)));
        }
        rep.add_pass_fail("metric.distance_oracle", worst < 1e-6, worst, 1e-6, 1e-6,
                          "cross-ratio vs quadrature");
    });

    guarded(rep, "metric.collinear_additivity", [&] {
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const Vec2 a = random_interior(dom, rng, 0.8);
            const Vec2 c = random_interior(dom, rng, 0.8);
            const Vec2 b = a + rng.uniform(0.2, 0.8) * (c - a);
            worst = std::max(worst, std::abs(hilbert_distance(dom, a, b) +
                                             hilbert_distance(dom, b, c) -
                                             hilbert_distance(dom, a, c)));
        }
        rep.add_pass_fail("metric.collinear_additivity", worst < 1e-8, worst, 1e-8, 1e-8);
    });
}

void run_connection(SuiteContext& ctx) {
    const ConvexDomain2& dom = ctx.dom;
    VerificationReport& rep = ctx.rep;
    Rng rng = Rng(ctx.opt.seed).split(3);

    guarded(rep, "connection.chord_geodesic", [&] {
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const CurveJet jet{random_interior(dom, rng, 0.8),
                               rng.uniform(0.3, 3.0) * random_dir(rng), Vec2::Zero()};
            worst = std::max(worst, arclength_accel(dom, jet).norm());
        }
        rep.add_pass_fail("connection.chord_geodesic", worst < 1e-8, worst, 1e-8, 1e-8);
    });

    guarded(rep, "connection.accel_orthogonal", [&] {
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            CurveJet jet;
            jet.c = random_interior(dom, rng, 0.8);
            jet.c1 = random_dir(rng);
            jet.c2 = Vec2(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
            const Vec2 acc = arclength_accel(dom, jet);
            const SymMatrix2 g = fundamental_tensor(dom, jet.c, jet.c1);
            worst = std::max(worst, std::abs(g.quad(acc, jet.c1)));
        }
        rep.add_pass_fail("connection.accel_orthogonal", worst < 1e-8, worst, 1e-8, 1e-8);
    });

    guarded(rep, "connection.reparam_invariance", [&] {
        double worst = 0.0;
        for (int i = 0; i < 25; ++i) {
            CurveJet jet;
            jet.c = random_interior(dom, rng, 0.75);
            jet.c1 = random_dir(rng);
            jet.c2 = Vec2(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
            const double lambda = rng.uniform(0.2, 5.0);
            CurveJet scaled{jet.c, lambda * jet.c1, lambda * lambda * jet.c2};
            worst = std::max(worst, std::abs(rund_curvature(dom, scaled) -
                                             rund_curvature(dom, jet)));
            worst = std::max(worst, std::abs(finsler_curvature(dom, scaled) -
                                             finsler_curvature(dom, jet)));
        }
        rep.add_pass_fail("connection.reparam_invariance", worst < 1e-10, worst, 1e-10,
                          1e-10);
    });

    guarded(rep, "connection.unit_normal", [&] {
        double worst = 0.0;
        for (int i = 0; i < 40; ++i) {
            const Vec2 x = random_interior(dom, rng, 0.75);
            const Vec2 y = random_dir(rng);
            const NormalVector n = unit_normal(dom, x, y);
            worst = std::max(worst, std::abs(hilbert_norm(dom, x, n.n) - 1.0));
            worst = std::max(worst, std::abs(fundamental_tensor(dom, x, n.n).quad(y, n.n)));
        }
        rep.add_pass_fail("connection.unit_normal", worst < 1e-8, worst, 1e-8, 1e-8,
                          "F(n)=1 and g_n(y,n)=0 residuals");
    });
}

void run_spheres(SuiteContext& ctx) {
    const ConvexDomain2& dom = ctx.dom;
    VerificationReport& rep = ctx.rep;

    guarded(rep, "spheres.distance_consistency", [&] {
        double worst = 0.0;
        for (double r : linspace(std::max(0.5, ctx.opt.r_min), ctx.opt.r_max, 10)) {
            for (int i = 0; i < 16; ++i) {
                const double phi = 2.0 * kPi * i / 16;
                const Vec2 pt = dom.base_point() +
                                sphere_radial(dom, r, phi) * dom.direction(phi);
                worst = std::max(worst,
                                 std::abs(hilbert_distance(dom, dom.base_point(), pt) - r));
            }
        }
        rep.add_pass_fail("spheres.distance_consistency", worst < 1e-8, worst, 1e-8, 1e-8,
                          "closed-form circle points vs hilbert_distance");
    });

    guarded(rep, "spheres.gap_law", [&] {
        const double a = dom.omega(ctx.opt.phi);
        const double b = dom.omega(ctx.opt.phi + kPi);
        const double coeff = a * (a / b + 1.0);
        double prev = std::numeric_limits<double>::infinity();
        bool monotone = true;
        double last = 0.0;
        for (double r : linspace(std::max(2.0, ctx.opt.r_min), ctx.opt.r_max, 7)) {
            const double gap = a - sphere_radial(dom, r, ctx.opt.phi);
            last = std::abs(gap * std::exp(2.0 * r) - coeff);
            if (last > prev + 1e-12) monotone = false;
            prev = last;
        }
        rep.add_pass_fail("spheres.gap_law", monotone, last, 0.0, 0.0,
                          "|x2 e^{2r} - coeff| decreasing in r");
    });

    guarded(rep, "spheres.sweep", [&] {
        const SweepTable& table = ctx.sweep();
        int bad = 0;
        for (const SweepRow& row : table.rows)
            if (!row.ok) ++bad;
        rep.add_pass_fail("spheres.sweep", bad == 0, static_cast<double>(bad), 0.0, 0.0,
                          "rows with conditioning failures");
    });

    if (dom.is_quadric()) {
        guarded(rep, "spheres.coth_benchmark", [&] {
            double worst = 0.0, worst_rf = 0.0;
            for (const SweepRow& row : ctx.sweep().rows) {
                if (!row.ok) continue;
                const double expected = 1.0 / std::tanh(row.r);
                worst = std::max({worst, std::abs(row.k_n - expected) / expected,
                                  std::abs(row.k_r - expected) / expected,
                                  std::abs(row.k_f - expected) / expected});
                worst_rf = std::max(worst_rf, std::abs(row.k_r - row.k_f));
            }
            rep.add_pass_fail("spheres.coth_benchmark", worst < 1e-5, worst, 1e-5, 1e-5,
                              "Klein-model circles");
            rep.add_pass_fail("spheres.riemannian_coincidence", worst_rf < 1e-6, worst_rf,
                              1e-6, 1e-6, "|k_R - k_F|");
        });
    }

    guarded(rep, "spheres.limit_at_rmax", [&] {
        double worst = 0.0;
        for (int i = 0; i < 16; ++i) {
            const double phi = 2.0 * kPi * i / 16;
            const SweepTable one = curvature_sweep(dom, {ctx.opt.r_max}, phi);
            const SweepRow& row = one.rows.front();
            if (!row.ok) throw SolverError("sweep row failed at phi=" + std::to_string(phi));
            worst = std::max({worst, std::abs(row.k_n - 1.0), std::abs(row.k_r - 1.0),
                              std::abs(row.k_f - 1.0)});
        }
        rep.add_pass_fail("spheres.limit_at_rmax", worst <= 0.05, worst, 0.05, 0.05,
                          "max |k - 1| over 16 angles, all three curvatures");
    });

    const double fit_lo = std::max(2.0, ctx.opt.r_min);
    for (SweepColumn col : {SweepColumn::normal, SweepColumn::rund, SweepColumn::finsler}) {
        const std::string id = "spheres.rate_" + column_name(col);
        guarded(rep, id, [&] {
            const AsymptoticFit fit =
                fit_exponential_approach(ctx.sweep(), col, fit_lo, ctx.opt.r_max);
            rep.add_pass_fail(id, std::abs(fit.rate - 2.0) <= 0.2, fit.rate, 2.0, 0.2,
                              "fitted decay rate of " + column_name(col));
        });
    }

    guarded(rep, "spheres.deviation_monotone", [&] {
        bool monotone = true;
        double prev_n = std::numeric_limits<double>::infinity();
        double prev_r = prev_n, prev_f = prev_n;
        for (const SweepRow& row : ctx.sweep().rows) {
            if (!row.ok || row.r < fit_lo - 1e-12) continue;
            const double dn = std::abs(row.k_n - 1.0);
            const double dr = std::abs(row.k_r - 1.0);
            const double df = std::abs(row.k_f - 1.0);
            if (dn > prev_n + 1e-10 || dr > prev_r + 1e-10 || df > prev_f + 1e-10)
                monotone = false;
            prev_n = dn;
            prev_r = dr;
            prev_f = df;
        }
        rep.add_pass_fail("spheres.deviation_monotone", monotone, monotone ? 1.0 : 0.0,
                          1.0, 0.0, "|k - 1| decreasing on the fit window");
    });
}

void run_normalization(SuiteContext& ctx) {
    VerificationReport& rep = ctx.rep;
    Rng rng = Rng(ctx.opt.seed).split(4);

    guarded(rep, "normalization.contract", [&] {
        const NormalizationResult& res = ctx.normalized();
        const NormalizationReport& nr = res.report;
        rep.add_pass_fail("normalization.p_fixed", nr.p_image_residual < 1e-10,
                          nr.p_image_residual, 1e-10, 1e-10);
        rep.add_pass_fail("normalization.tangent_level", std::abs(nr.tangent_slope) < 1e-8,
                          nr.tangent_slope, 0.0, 1e-8);
        rep.add_pass_fail("normalization.f2_half", std::abs(nr.f2_normalized - 0.5) < 1e-8,
                          nr.f2_normalized, 0.5, 1e-8);
        rep.add_pass_fail("normalization.tan_beta_bound",
                          std::abs(nr.tan_beta) <= nr.tan_beta_bound + 1e-8,
                          std::abs(nr.tan_beta), nr.tan_beta_bound, 1e-8);

        const Vec2 t0 = res.domain.boundary_tangent(0.0);
        const Vec2 t1 = res.domain.boundary_tangent(kPi);
        const double cross = std::abs(cross2(t0, t1));
        rep.add_pass_fail("normalization.parallel_tangents", cross < 1e-8, cross, 0.0,
                          1e-8);

        rep.add_pass_fail("normalization.curvature_bounded",
                          std::isfinite(nr.curvature_max) && nr.curvature_max > 0.0,
                          nr.curvature_max, 0.0, 0.0, "max boundary curvature (sweep)");
        rep.add_pass_fail("normalization.f3_finite", std::isfinite(nr.f3_normalized),
                          nr.f3_normalized, 0.0, 0.0, "third graph derivative at p");
        rep.add_diagnostic("normalization.omega_hat0", nr.omega_hat0, 1.0,
                           "distance from the image of o to p (not forced to 1)");
        rep.add_diagnostic("normalization.alpha", nr.alpha, 0.0, "step-1 shear angle");
        rep.add_diagnostic("normalization.tan_beta", nr.tan_beta, 0.0,
                           "step-2 leveling slope");
    });

    guarded(rep, "normalization.distance_invariance", [&] {
        const NormalizationResult& res = ctx.normalized();
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const Vec2 a = random_interior(ctx.dom, rng, 0.8);
            const Vec2 b = random_interior(ctx.dom, rng, 0.8);
            const double d0 = hilbert_distance(ctx.dom, a, b);
            const double d1 =
                hilbert_distance(res.domain, res.map.apply(a), res.map.apply(b));
            worst = std::max(worst, std::abs(d0 - d1));
        }
        rep.add_pass_fail("normalization.distance_invariance", worst < 1e-8, worst, 1e-8,
                          1e-8, "100 seeded pairs through the normalization map");
    });
}

void run_expansion(SuiteContext& ctx) {
    VerificationReport& rep = ctx.rep;

    guarded(rep, "expansion.suite", [&] {
        const ConvexDomain2& nd = ctx.normalized().domain;
        const std::vector<double> xs = {1e-2, 1e-3, 1e-4};
        const double w0 = nd.omega(0.0);
        const std::vector<double> xs_exact = {0.5 * w0, 0.2 * w0, 0.05 * w0};

        for (const char* id : {"T_LEAD", "F_LEAD", "G11_LEAD", "G22_LEAD", "FL_LEAD"}) {
            const ExpansionReport er = expansion_check(nd, id, xs);
            rep.add_pass_fail(std::string("expansion.") + id,
                              std::abs(er.extrapolated - 1.0) < 0.01, er.extrapolated,
                              1.0, 0.01, "extrapolated scaled limit");
        }

        for (const char* id : {"T_X2COEF", "THRAZN"}) {
            const ExpansionReport er = expansion_check(nd, id, xs);
            const double tol = std::max(0.02 * std::abs(er.target), 1e-3);
            rep.add_pass_fail(std::string("expansion.") + id,
                              std::abs(er.extrapolated - er.target) <= tol,
                              er.extrapolated, er.target, tol);
        }

        {
            const ExpansionReport er = expansion_check(nd, "G12_LEAD", xs);
            if (er.applicable)
                rep.add_diagnostic("expansion.G12_LEAD", er.extrapolated, 1.0, er.note);
            else
                rep.add_diagnostic("expansion.G12_LEAD",
                                   std::numeric_limits<double>::quiet_NaN(), 1.0, er.note);
        }
        {
            const ExpansionReport er = expansion_check(nd, "F_SQRT_COEF", xs);
            rep.add_diagnostic("expansion.F_SQRT_COEF", er.extrapolated, er.target,
                               "measured sqrt coefficient vs printed series value");
        }

        for (const char* id : {"F2_EXACT", "GARB_EXACT"}) {
            const ExpansionReport er = expansion_check(nd, id, xs_exact);
            rep.add_pass_fail(std::string("expansion.") + id, er.extrapolated < 1e-9,
                              er.extrapolated, 1e-9, 1e-9, "max residual");
        }

        // Vertical reference direction diagonalizes the tensor on the axis.
        double worst = 0.0;
        const Vec2 p = nd.boundary_point(0.0);
        const Vec2 tangent = nd.boundary_tangent(0.0);
        const Vec2 n_in = rot90(tangent);
        for (double x2 : xs_exact) {
            const SymMatrix2 g = fundamental_tensor(nd, Vec2(p + x2 * n_in), n_in);
            worst = std::max(worst, std::abs(g.quad(tangent, n_in)));
        }
        rep.add_pass_fail("expansion.G12_VERTICAL_ZERO", worst < 1e-9, worst, 1e-9, 1e-9,
                          "g12 with vertical reference on the axis");
    });
}

void run_diagnostic(SuiteContext& ctx) {
    VerificationReport& rep = ctx.rep;

    guarded(rep, "diagnostic.coefficients", [&] {
        const Predictions pred = predicted_coefficients(ctx.normalized().domain);
        rep.add_diagnostic("diagnostic.C", pred.c, 0.0, "(1 + omega(pi)) / omega(pi)");
        rep.add_diagnostic("diagnostic.H", pred.chord_h, 0.0, "axis chord through p");
        rep.add_diagnostic("diagnostic.L_chord", pred.l_chord, 0.0,
                           "chord through p in direction (f3, -1/2)");
        rep.add_diagnostic("diagnostic.f3", pred.f3, 0.0, "");
        rep.add_diagnostic("diagnostic.f4", pred.f4, 0.0, "");

        const double fit_lo = std::max(2.0, ctx.opt.r_min);
        const auto fit = [&](SweepColumn col) {
            return fit_exponential_approach(ctx.sweep(), col, fit_lo, ctx.opt.r_max);
        };
        rep.add_diagnostic("diagnostic.fit_normal_vs_predicted",
                           fit(SweepColumn::normal).coeff, pred.a_normal,
                           "fitted e^{-2r} coefficient of k_n vs closed form");
        rep.add_diagnostic("diagnostic.fit_rund_sq_vs_predicted",
                           fit(SweepColumn::rund_sq).coeff, pred.a_rund_sq,
                           "fitted e^{-2r} coefficient of k_R^2 vs closed form");
        rep.add_diagnostic("diagnostic.fit_finsler_sq_vs_predicted",
                           fit(SweepColumn::finsler_sq).coeff, pred.a_finsler_sq,
                           "fitted e^{-2r} coefficient of k_F^2 vs closed form");
    });
}

} // namespace

const std::vector<std::string>& SuiteOptions::known_groups() {
    static const std::vector<std::string> groups = {
        "geometry", "metric", "connection", "normalization",
        "spheres",  "expansion", "diagnostic"};
    return groups;
}

SuiteResult run_suite(const ConvexDomain2& dom, const SuiteOptions& options) {
    for (const std::string& g : options.groups) {
        const auto& known = SuiteOptions::known_groups();
        if (std::find(known.begin(), known.end(), g) == known.end())
            throw InputError("unknown check group: " + g);
    }

    SuiteResult result;
    SuiteContext ctx{dom, options, result.report, std::nullopt, std::nullopt};

    auto selected = [&](const char* g) {
        return std::find(options.groups.begin(), options.groups.end(), g) !=
               options.groups.end();
    };

    if (selected("geometry")) run_geometry(ctx);
    if (selected("metric")) run_metric(ctx);
    if (selected("connection")) run_connection(ctx);
    if (selected("normalization")) run_normalization(ctx);
    if (selected("spheres")) run_spheres(ctx);
    if (selected("expansion")) run_expansion(ctx);
    if (selected("diagnostic")) run_diagnostic(ctx);

    result.sweep = std::move(ctx.main_sweep);
    return result;
}

} // namespace hgeo
