#include <doctest.h>

#include <cmath>

#include "hgeo/connection.hpp"
#include "hgeo/convex_domain.hpp"
#include "hgeo/rng.hpp"

using namespace hgeo;

namespace {

ConvexDomain2 unit_disk() {
    return ConvexDomain2::disk({0.0, 0.0}, 1.0, {0.0, 0.0}, {1.0, 0.0});
}

ConvexDomain2 bump_domain() {
    return ConvexDomain2::radial_fourier(1.0, {0.0, 0.0, 0.05}, {}, {0.0, 0.0},
                                         {0.0, 0.0}, {1.0, 0.0});
}

/// Euclidean circle of radius rho about the origin of the unit disk at angle
/// phi. In the hyperbolic (Klein) model this is the metric circle of radius
/// artanh(rho), with geodesic curvature coth(artanh(rho)) = 1/rho.
CurveJet klein_circle_jet(double rho, double phi) {
    CurveJet jet;
    jet.c = rho * Vec2(std::cos(phi), std::sin(phi));
    jet.c1 = rho * Vec2(-std::sin(phi), std::cos(phi));
    jet.c2 = -rho * Vec2(std::cos(phi), std::sin(phi));
    return jet;
}

CurveJet chord_jet(const Vec2& c, const Vec2& v) { return CurveJet{c, v, Vec2::Zero()}; }

} // namespace

TEST_CASE("covariant acceleration closed forms on the unit disk") {
    const auto disk = unit_disk();
    const Vec2 zero = covariant_accel(disk, chord_jet({0.0, 0.0}, {1.0, 0.0}));
    CHECK(zero.norm() < 1e-13);

    // Theta(+) - Theta(-) = 2 - 2/3 at (0.5, 0) in direction (1, 0).
    const Vec2 a = covariant_accel(disk, chord_jet({0.5, 0.0}, {1.0, 0.0}));
    CHECK(a.x() == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    CHECK(std::abs(a.y()) < 1e-13);
}

TEST_CASE("chords annihilate the arc-length acceleration") {
    Rng rng(5);
    for (const auto& dom : {unit_disk(), bump_domain()}) {
        for (int i = 0; i < 50; ++i) {
            const double phi = rng.uniform(0.0, 2.0 * kPi);
            const Vec2 x = 0.8 * std::sqrt(rng.uniform()) * dom.omega(phi) * dom.direction(phi);
            const double a = rng.uniform(0.0, 2.0 * kPi);
            const Vec2 v = rng.uniform(0.3, 3.0) * Vec2(std::cos(a), std::sin(a));
            CHECK(arclength_accel(dom, chord_jet(x, v)).norm() < 1e-8);
            CHECK(rund_curvature(dom, chord_jet(x, v)) < 1e-7);
        }
    }
}

TEST_CASE("arc-length acceleration is g-orthogonal to the velocity") {
    const auto bump = bump_domain();
    Rng rng(9);
    for (int i = 0; i < 50; ++i) {
        const double phi = rng.uniform(0.0, 2.0 * kPi);
        const Vec2 x = 0.75 * std::sqrt(rng.uniform()) * bump.omega(phi) * bump.direction(phi);
        CurveJet jet;
        jet.c = x;
        jet.c1 = Vec2(std::cos(rng.uniform(0.0, 2.0 * kPi)),
                      std::sin(rng.uniform(0.0, 2.0 * kPi)));
        jet.c2 = Vec2(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        const Vec2 acc = arclength_accel(bump, jet);
        const SymMatrix2 g = fundamental_tensor(bump, jet.c, jet.c1);
        CHECK(std::abs(g.quad(acc, jet.c1)) < 1e-8 * std::max(1.0, acc.norm()));
    }
}

TEST_CASE("klein circles have curvature 1/rho in all three senses") {
    const auto disk = unit_disk();
    for (double rho : {0.3, 0.5, 0.7}) {
        for (double phi : {0.0, 1.1}) {
            const CurveJet jet = klein_circle_jet(rho, phi);
            const double expected = 1.0 / rho;
            CHECK(rund_curvature(disk, jet) == doctest::Approx(expected).epsilon(1e-9));
            CHECK(finsler_curvature(disk, jet) == doctest::Approx(expected).epsilon(1e-9));

            const NormalVector n =
                unit_normal(disk, jet.c, jet.c1, std::optional<Vec2>(Vec2(0.0, 0.0)));
            const NormalCurvature kn = normal_curvature(disk, jet, n);
            CHECK(kn.value == doctest::Approx(expected).epsilon(1e-9));
            CHECK(kn.raw == doctest::Approx(-expected).epsilon(1e-9));
        }
    }
}

TEST_CASE("normal curvature of a chord vanishes") {
    const auto disk = unit_disk();
    const CurveJet jet = chord_jet({0.2, -0.3}, {0.6, 0.8});
    const NormalVector n = unit_normal(disk, jet.c, jet.c1);
    const NormalCurvature kn = normal_curvature(disk, jet, n);
    CHECK(std::abs(kn.value) < 1e-8);
    CHECK(std::abs(kn.raw) < 1e-8);
}

TEST_CASE("unit normal solves its defining equations") {
    const auto disk = unit_disk();
    const NormalVector n0 = unit_normal(disk, {0.0, 0.0}, {1.0, 0.0});
    CHECK((n0.n - Vec2(0.0, 1.0)).norm() < 1e-10);  // positively oriented

    // Tall ellipse x1^2/2 + (x2-1)^2 < 1 at (0, 0.5), tangent (1, 0), outward
    // away from (0, 1): n = (0, -1) / F(x, (0, 1)) with F = 4/3.
    const auto ell = ConvexDomain2::ellipse({0.0, 1.0}, std::sqrt(2.0), 1.0, {0.0, 1.0},
                                            {0.0, -1.0});
    const NormalVector n1 =
        unit_normal(ell, {0.0, 0.5}, {1.0, 0.0}, std::optional<Vec2>(Vec2(0.0, 1.0)));
    CHECK((n1.n - Vec2(0.0, -0.75)).norm() < 1e-9);

    const auto bump = bump_domain();
    Rng rng(13);
    for (int i = 0; i < 40; ++i) {
        const double phi = rng.uniform(0.0, 2.0 * kPi);
        const Vec2 x = 0.7 * std::sqrt(rng.uniform()) * bump.omega(phi) * bump.direction(phi);
        const Vec2 y(std::cos(rng.uniform(0.0, 2.0 * kPi)),
                     std::sin(rng.uniform(0.0, 2.0 * kPi)));
        const NormalVector n = unit_normal(bump, x, y);
        CHECK(std::abs(hilbert_norm(bump, x, n.n) - 1.0) < 1e-10);
        CHECK(std::abs(fundamental_tensor(bump, x, n.n).quad(y, n.n)) < 1e-8);
    }
}

TEST_CASE("curvatures are invariant under curve reparametrization") {
    const auto bump = bump_domain();
    Rng rng(19);
    for (int i = 0; i < 25; ++i) {
        const double phi = rng.uniform(0.0, 2.0 * kPi);
        CurveJet jet;
        jet.c = 0.6 * std::sqrt(rng.uniform()) * bump.omega(phi) * bump.direction(phi);
        jet.c1 = Vec2(std::cos(rng.uniform(0.0, 2.0 * kPi)),
                      std::sin(rng.uniform(0.0, 2.0 * kPi)));
        jet.c2 = Vec2(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));

        const double lambda = rng.uniform(0.2, 4.0);
        CurveJet scaled = jet;
        scaled.c1 *= lambda;
        scaled.c2 *= lambda * lambda;

        CHECK(rund_curvature(bump, scaled) ==
              doctest::Approx(rund_curvature(bump, jet)).epsilon(1e-10));
        CHECK(finsler_curvature(bump, scaled) ==
              doctest::Approx(finsler_curvature(bump, jet)).epsilon(1e-10));
    }
}

TEST_CASE("normal curvature depends only on the tangent direction") {
    const auto disk = unit_disk();
    const CurveJet jet = klein_circle_jet(0.5, 0.3);
    const NormalVector n =
        unit_normal(disk, jet.c, jet.c1, std::optional<Vec2>(Vec2(0.0, 0.0)));
    const double base = normal_curvature(disk, jet, n).value;

    Rng rng(29);
    for (int i = 0; i < 10; ++i) {
        CurveJet shifted = jet;
        shifted.c2 += rng.uniform(-2.0, 2.0) * jet.c1;  // tangential re-acceleration
        CHECK(normal_curvature(disk, shifted, n).value ==
              doctest::Approx(base).epsilon(1e-8));
    }
}

TEST_CASE("rund curvature agrees with its tensor-route definition") {
    const auto bump = bump_domain();
    Rng rng(53);
    for (int i = 0; i < 25; ++i) {
        const double phi = rng.uniform(0.0, 2.0 * kPi);
        CurveJet jet;
        jet.c = 0.6 * std::sqrt(rng.uniform()) * bump.omega(phi) * bump.direction(phi);
        jet.c1 = Vec2(std::cos(rng.uniform(0.0, 2.0 * kPi)),
                      std::sin(rng.uniform(0.0, 2.0 * kPi)));
        jet.c2 = Vec2(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        const Vec2 a = arclength_accel(bump, jet);
        if (a.norm() < 1e-10) continue;
        const double via_f = rund_curvature(bump, jet);
        const double via_g = std::sqrt(fundamental_tensor(bump, jet.c, a).quad(a, a));
        CHECK(via_f == doctest::Approx(via_g).epsilon(1e-9));
    }
}
