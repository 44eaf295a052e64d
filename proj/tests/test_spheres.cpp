#include <doctest.h>

#include <cmath>

#include "hgeo/convex_domain.hpp"
#include "hgeo/errors.hpp"
#include "hgeo/finsler.hpp"
#include "hgeo/normalization.hpp"
#include "hgeo/spheres.hpp"

using namespace hgeo;

namespace {

ConvexDomain2 unit_disk() {
    return ConvexDomain2::disk({0.0, 0.0}, 1.0, {0.0, 0.0}, {1.0, 0.0});
}

// Radius-2 disk seen from o = (0,1): omega(0) = 1 toward p = (0,0),
// omega(pi) = 3. Its Hilbert geometry is the hyperbolic plane.
ConvexDomain2 offset_disk() {
    return ConvexDomain2::disk({0.0, 2.0}, 2.0, {0.0, 1.0}, {0.0, -1.0});
}

ConvexDomain2 tall_ellipse() {
    return ConvexDomain2::ellipse({0.0, 1.0}, std::sqrt(2.0), 1.0, {0.0, 1.0},
                                  {0.0, -1.0});
}

ConvexDomain2 bump_domain() {
    return ConvexDomain2::radial_fourier(1.0, {0.0, 0.0, 0.05}, {}, {0.0, 0.0},
                                         {0.0, 0.0},
                                         {std::cos(kPi / 4.0), std::sin(kPi / 4.0)});
}

std::vector<double> radius_grid(double lo, double hi, int steps) {
    std::vector<double> r(steps);
    for (int i = 0; i < steps; ++i) r[i] = lo + (hi - lo) * i / (steps - 1);
    return r;
}

} // namespace

TEST_CASE("sphere polar function closed forms") {
    const auto disk = unit_disk();
    for (double phi : {0.0, 0.9, 4.0})
        CHECK(sphere_radial(disk, 1.0, phi) == doctest::Approx(std::tanh(1.0)).epsilon(1e-13));

    const auto off = offset_disk();
    const double e2 = std::exp(2.0);
    CHECK(sphere_radial(off, 1.0, 0.0) ==
          doctest::Approx(3.0 * (e2 - 1.0) / (1.0 + 3.0 * e2)).epsilon(1e-13));
}

TEST_CASE("sphere points sit at the right hilbert distance") {
    for (const auto& dom : {unit_disk(), offset_disk(), bump_domain()}) {
        for (double r : {0.5, 1.0, 3.0, 5.0}) {
            for (int i = 0; i < 8; ++i) {
                const double phi = 2.0 * kPi * i / 8;
                const double rho = sphere_radial(dom, r, phi);
                const Vec2 pt = dom.base_point() + rho * dom.direction(phi);
                CHECK(std::abs(hilbert_distance(dom, dom.base_point(), pt) - r) < 1e-8);
            }
        }
    }
}

TEST_CASE("gap between circle and boundary decays like e^{-2r}") {
    const auto off = offset_disk();
    // omega(0) = 1, omega(pi) = 3: coefficient 1*(1/3 + 1) = 4/3.
    double prev = std::numeric_limits<double>::infinity();
    for (double r : {2.0, 3.0, 4.0, 5.0}) {
        const double gap = off.omega(0.0) - sphere_radial(off, r, 0.0);
        const double scaled = gap * std::exp(2.0 * r);
        CHECK(std::abs(scaled - 4.0 / 3.0) < prev);
        prev = std::abs(scaled - 4.0 / 3.0);
    }
}

TEST_CASE("circle jet on the unit disk") {
    const auto disk = unit_disk();
    const CurveJet jet = circle_jet(disk, 1.0, 0.0);
    CHECK(jet.c1.norm() == doctest::Approx(std::tanh(1.0)).epsilon(1e-12));
    CHECK(std::abs(jet.c1.dot(disk.ref_dir())) < 1e-13);  // parallel to e_perp
    CHECK((jet.c2 + std::tanh(1.0) * disk.ref_dir()).norm() < 1e-12);
}

TEST_CASE("circle jet matches finite differences in phi") {
    const auto bump = bump_domain();
    const double r = 1.7, phi = 0.8, h = 1e-3;
    const CurveJet jet = circle_jet(bump, r, phi);
    auto pt = [&](double p) {
        return Vec2(bump.base_point() + sphere_radial(bump, r, p) * bump.direction(p));
    };
    const Vec2 d1 = (-pt(phi + 2 * h) + 8 * pt(phi + h) - 8 * pt(phi - h) + pt(phi - 2 * h)) / (12 * h);
    const Vec2 d2 = (-pt(phi + 2 * h) + 16 * pt(phi + h) - 30 * pt(phi) + 16 * pt(phi - h) -
                     pt(phi - 2 * h)) / (12 * h * h);
    CHECK((jet.c1 - d1).norm() < 1e-7);
    CHECK((jet.c2 - d2).norm() < 1e-6);
}

TEST_CASE("hyperbolic benchmark: all three curvatures equal coth r") {
    const auto off = offset_disk();
    const auto table = curvature_sweep(off, radius_grid(1.0, 5.0, 9), 0.0);
    for (const SweepRow& row : table.rows) {
        REQUIRE(row.ok);
        const double expected = 1.0 / std::tanh(row.r);
        CHECK(std::abs(row.k_n - expected) < 1e-5 * expected);
        CHECK(std::abs(row.k_r - expected) < 1e-5 * expected);
        CHECK(std::abs(row.k_f - expected) < 1e-5 * expected);
        CHECK(std::abs(row.k_r - row.k_f) < 1e-6);
        CHECK(row.gap_err < 0.3);
    }
}

TEST_CASE("arc-length acceleration of the unit circle has norm coth(1)") {
    const auto off = offset_disk();
    const CurveJet jet = circle_jet(off, 1.0, 0.0);
    const Vec2 acc = arclength_accel(off, jet);
    const double f = hilbert_norm(off, jet.c, acc);
    CHECK(f * f == doctest::Approx(std::pow(1.0 / std::tanh(1.0), 2)).epsilon(1e-8));
}

TEST_CASE("unit normal of circles on normalized domains is (0,-1)/F") {
    const auto bump = bump_domain();
    for (const auto& nd : {normalize(bump, {0.0, 0.0}, 0.0).domain, tall_ellipse()}) {
        for (double r : {1.0, 2.5}) {
            const CurveJet jet = circle_jet(nd, r, 0.0);
            const NormalVector n =
                unit_normal(nd, jet.c, jet.c1, std::optional<Vec2>(nd.base_point()));
            // In normalized coordinates the outward normal at the axis point is
            // vertical and F-normalized.
            const Vec2 expected =
                Vec2(0.0, -1.0) / hilbert_norm(nd, jet.c, {0.0, 1.0});
            CHECK((n.n - expected).norm() < 1e-8);
        }
    }
}

TEST_CASE("prediction chords agree with direct chord queries") {
    const auto ell = tall_ellipse();
    const auto pred = predicted_coefficients(ell);
    const Vec2 p = ell.boundary_point(0.0);
    const Vec2 n_in = rot90(ell.boundary_tangent(0.0));
    CHECK(pred.chord_h ==
          doctest::Approx(ell.chord_through_boundary(p, n_in)).epsilon(1e-8));
}

TEST_CASE("sphere input validation") {
    const auto disk = unit_disk();
    CHECK_THROWS_AS(sphere_radial(disk, -1.0, 0.0), InputError);
    CHECK_THROWS_AS(sphere_radial(disk, 0.0, 0.0), InputError);
    CHECK_THROWS_AS(expansion_check(tall_ellipse(), "T_LEAD", {2.0}), InputError);
    CHECK_THROWS_AS(expansion_check(tall_ellipse(), "T_LEAD", {}), InputError);
    CHECK_THROWS_AS(curvature_sweep(disk, {2.0, 1.0}, 0.0), InputError);
}

TEST_CASE("synthetic exponential fit is exact") {
    SweepTable table;
    table.phi = 0.0;
    for (double r : {2.0, 3.0, 4.0, 5.0}) {
        SweepRow row;
        row.r = r;
        row.k_n = 1.0 + 3.0 * std::exp(-2.0 * r);
        row.k_r = row.k_f = row.k_n;
        row.ok = true;
        table.rows.push_back(row);
    }
    const AsymptoticFit fit = fit_exponential_approach(table, SweepColumn::normal, 2.0, 5.0);
    CHECK(fit.coeff == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(fit.rate == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(fit.rms_log_residual < 1e-12);

    SweepTable three = table;
    three.rows.pop_back();
    CHECK_THROWS_AS(fit_exponential_approach(three, SweepColumn::normal, 2.0, 5.0),
                    SolverError);
}

TEST_CASE("fitted decay of coth-type curvatures") {
    const auto off = offset_disk();
    const auto table = curvature_sweep(off, radius_grid(2.0, 5.0, 13), 0.0);
    // coth r = 1 + 2 e^{-2r} + O(e^{-4r}).
    const AsymptoticFit kn = fit_exponential_approach(table, SweepColumn::normal, 2.0, 5.0);
    CHECK(kn.rate == doctest::Approx(2.0).epsilon(0.02));
    CHECK(kn.coeff == doctest::Approx(2.0).epsilon(0.05));

    // coth^2 r = 1 + 4 e^{-2r} + O(e^{-4r}), here on the ellipse.
    const auto ell = tall_ellipse();
    const auto te = curvature_sweep(ell, radius_grid(2.0, 5.0, 13), 0.0);
    const AsymptoticFit kr2 = fit_exponential_approach(te, SweepColumn::rund_sq, 2.0, 5.0);
    CHECK(kr2.rate == doctest::Approx(2.0).epsilon(0.02));
    CHECK(kr2.coeff == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("predicted coefficients") {
    // Tall ellipse: C = 2, H = 2, L = 2, f3 = 0, f4 = 3/4.
    const auto pe = predicted_coefficients(tall_ellipse());
    CHECK(pe.c == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(pe.chord_h == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(pe.l_chord == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(pe.a_normal == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(pe.a_rund_sq == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(pe.a_finsler_sq == doctest::Approx(6.0).epsilon(1e-8));

    // Offset disk: C = 4/3, H = 4, f3 = 0.
    const auto pd = predicted_coefficients(offset_disk());
    CHECK(pd.c == doctest::Approx(4.0 / 3.0).epsilon(1e-10));
    CHECK(pd.a_normal == doctest::Approx(1.0 / 3.0).epsilon(1e-9));

    // f3 = 0 symmetry: a_normal = C/H and a_rund_sq = 2C/L.
    CHECK(pd.a_normal == doctest::Approx(pd.c / pd.chord_h).epsilon(1e-12));
    CHECK(pd.a_rund_sq == doctest::Approx(2.0 * pd.c / pd.l_chord).epsilon(1e-12));
}

TEST_CASE("exact chord identities on the ellipse") {
    const auto ell = tall_ellipse();
    const auto f2 = expansion_check(ell, "F2_EXACT", {0.5, 0.2, 0.05});
    CHECK(f2.exact);
    CHECK(f2.extrapolated < 1e-12);

    const auto garb = expansion_check(ell, "GARB_EXACT", {0.5, 0.2, 0.05});
    CHECK(garb.extrapolated < 1e-11);
}

TEST_CASE("leading-order expansions on the ellipse") {
    const std::vector<double> xs = {1e-2, 1e-3, 1e-4};
    for (const char* id : {"T_LEAD", "F_LEAD", "G11_LEAD", "G22_LEAD", "FL_LEAD"}) {
        const auto rep = expansion_check(tall_ellipse(), id, xs);
        CHECK_MESSAGE(std::abs(rep.extrapolated - 1.0) < 1e-4, id);
    }

    // The chord parameter has no sqrt term here, so the scaled residuals of
    // T_LEAD shrink like x2: the empirical order is 1 and each step gains a
    // factor ~10.
    const auto tl = expansion_check(tall_ellipse(), "T_LEAD", xs);
    CHECK(tl.order == doctest::Approx(1.0).epsilon(0.05));
    CHECK(std::abs(tl.measured[1] - 1.0) < 0.2 * std::abs(tl.measured[0] - 1.0));
    CHECK(std::abs(tl.measured[2] - 1.0) < 0.2 * std::abs(tl.measured[1] - 1.0));

    // f3 = 0 here, so the t-coefficient and the Funk difference vanish. The
    // t-coefficient converges only like sqrt(x2), so one extrapolation level
    // leaves a ~1e-5 tail.
    CHECK(std::abs(expansion_check(tall_ellipse(), "T_X2COEF", xs).extrapolated) < 1e-4);
    CHECK(std::abs(expansion_check(tall_ellipse(), "THRAZN", xs).extrapolated) < 1e-6);

    // The sqrt-coefficient of F on the ellipse: the measured limit is the
    // Klein value 1/8 (the printed series target is 0 here; diagnostic only).
    const auto fs = expansion_check(tall_ellipse(), "F_SQRT_COEF", xs);
    CHECK(fs.extrapolated == doctest::Approx(0.125).epsilon(1e-3));

    // g12 check does not apply when f3 = 0.
    CHECK_FALSE(expansion_check(tall_ellipse(), "G12_LEAD", xs).applicable);
}

TEST_CASE("expansion checks with a genuine third derivative (normalized bump)") {
    const auto bump = bump_domain();
    const auto res = normalize(bump, {0.0, 0.0}, 0.0);
    const double f3 = res.report.f3_normalized;
    REQUIRE(std::abs(f3) > 1e-3);

    const std::vector<double> xs = {1e-2, 1e-3, 1e-4};
    const auto tx = expansion_check(res.domain, "T_X2COEF", xs);
    CHECK(tx.extrapolated == doctest::Approx(-4.0 * f3 / 3.0).epsilon(0.02));

    const auto th = expansion_check(res.domain, "THRAZN", xs);
    CHECK(th.extrapolated == doctest::Approx(2.0 * f3 / 3.0).epsilon(0.02));

    const auto g12 = expansion_check(res.domain, "G12_LEAD", xs);
    CHECK(g12.applicable);
    CHECK(g12.extrapolated == doctest::Approx(1.0).epsilon(0.05));

    for (const char* id : {"T_LEAD", "F_LEAD", "G11_LEAD", "G22_LEAD", "FL_LEAD"}) {
        const auto rep = expansion_check(res.domain, id, xs);
        CHECK_MESSAGE(std::abs(rep.extrapolated - 1.0) < 1e-2, id);
    }

    const auto f2 = expansion_check(res.domain, "F2_EXACT", {0.4, 0.15, 0.05});
    CHECK(f2.extrapolated < 1e-9);
    const auto garb = expansion_check(res.domain, "GARB_EXACT", {0.4, 0.15, 0.05});
    CHECK(garb.extrapolated < 1e-9);
}

TEST_CASE("unknown expansion id is rejected") {
    CHECK_THROWS_AS(expansion_check(tall_ellipse(), "NOPE", {0.1}), InputError);
}
