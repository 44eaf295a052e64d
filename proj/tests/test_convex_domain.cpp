#include <doctest.h>

#include <cmath>

#include "hgeo/convex_body.hpp"
#include "hgeo/convex_domain.hpp"
#include "hgeo/errors.hpp"
#include "hgeo/rng.hpp"

using namespace hgeo;

namespace {

ConvexDomain2 unit_disk() {
    return ConvexDomain2::disk({0.0, 0.0}, 1.0, {0.0, 0.0}, {0.0, -1.0});
}

// x1^2/2 + (x2-1)^2 < 1, radial about its center, phi = 0 pointing to (0,0).
ConvexDomain2 tall_ellipse() {
    return ConvexDomain2::ellipse({0.0, 1.0}, std::sqrt(2.0), 1.0, {0.0, 1.0},
                                  {0.0, -1.0});
}

ConvexDomain2 bump_domain() {
    return ConvexDomain2::radial_fourier(1.0, {0.0, 0.0, 0.05}, {}, {0.0, 0.0},
                                         {0.0, 0.0}, {1.0, 0.0});
}

} // namespace

TEST_CASE("boundary_point honors the reference direction") {
    const auto disk = unit_disk();
    CHECK((disk.boundary_point(0.0) - Vec2(0.0, -1.0)).norm() < 1e-14);
    CHECK((disk.boundary_point(kPi) - Vec2(0.0, 1.0)).norm() < 1e-12);

    const auto bump = bump_domain();
    CHECK(bump.omega(0.0) == doctest::Approx(1.05).epsilon(1e-14));
    CHECK((bump.boundary_point(0.0) - Vec2(1.05, 0.0)).norm() < 1e-13);
}

TEST_CASE("boundary_curvature on disks and the bump profile") {
    const auto disk = unit_disk();
    for (double phi : {0.0, 0.7, 2.9}) CHECK(disk.boundary_curvature(phi) == doctest::Approx(1.0).epsilon(1e-12));

    const auto disk2 = ConvexDomain2::disk({0.0, 2.0}, 2.0, {0.0, 1.0}, {0.0, -1.0});
    CHECK(disk2.boundary_curvature(1.3) == doctest::Approx(0.5).epsilon(1e-12));

    // Oracle: kappa at phi = 0 of omega = 1 + 0.05 cos(3 phi), computed from
    // the polar curvature formula with omega = 1.05, omega' = 0, omega'' = -0.45.
    const auto bump = bump_domain();
    CHECK(bump.boundary_curvature(0.0) == doctest::Approx(1.3605442176870748).epsilon(1e-12));
}

TEST_CASE("ray_exit closed-form cases") {
    const auto disk = unit_disk();
    const auto hit = disk.ray_exit({0.0, 0.0}, {0.0, 1.0});
    CHECK(hit.t == doctest::Approx(1.0).epsilon(1e-13));
    CHECK((hit.point - Vec2(0.0, 1.0)).norm() < 1e-12);

    const auto hit2 = disk.ray_exit({0.5, 0.0}, {1.0, 0.0});
    CHECK(hit2.t == doctest::Approx(0.5).epsilon(1e-13));

    // Ellipse x1^2/2 + (x2-1)^2 < 1 from (0, 0.5) horizontally: t = sqrt(1.5).
    const auto ell = tall_ellipse();
    const auto hit3 = ell.ray_exit({0.0, 0.5}, {1.0, 0.0});
    CHECK(hit3.t == doctest::Approx(std::sqrt(1.5)).epsilon(1e-13));

    CHECK_THROWS_AS(disk.ray_exit({2.0, 0.0}, {1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(disk.ray_exit({0.0, 0.0}, {0.0, 0.0}), InputError);
}

TEST_CASE("chord lengths and role swap") {
    const auto disk = unit_disk();
    const auto c = disk.chord({0.5, 0.0}, {1.0, 0.0});
    CHECK(c.r_plus == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(c.r_minus == doctest::Approx(1.5).epsilon(1e-13));
    CHECK(c.length() == doctest::Approx(2.0).epsilon(1e-13));

    const auto ell = tall_ellipse();
    const auto cv = ell.chord({0.0, 0.5}, {0.0, 1.0});
    CHECK(cv.r_plus == doctest::Approx(1.5).epsilon(1e-13));
    CHECK(cv.r_minus == doctest::Approx(0.5).epsilon(1e-13));

    // chord(x, y).x_plus == chord(x, -y).x_minus on random queries.
    const auto bump = bump_domain();
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        const double phi = rng.uniform(0.0, 2.0 * kPi);
        const double r = 0.9 * rng.uniform();
        const Vec2 x = r * bump.omega(phi) * bump.direction(phi);
        const Vec2 y(std::cos(rng.uniform(0.0, 2.0 * kPi)),
                     std::sin(rng.uniform(0.0, 2.0 * kPi)));
        const auto a = bump.chord(x, y);
        const auto b = bump.chord(x, Vec2(-y));
        CHECK((a.x_plus - b.x_minus).norm() < 1e-12);
        CHECK((a.x_minus - b.x_plus).norm() < 1e-12);
    }
}

TEST_CASE("boundary residual of ray exits stays tiny") {
    const auto bump = bump_domain();
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const double phi = rng.uniform(0.0, 2.0 * kPi);
        const Vec2 x = 0.85 * rng.uniform() * bump.omega(phi) * bump.direction(phi);
        const double a = rng.uniform(0.0, 2.0 * kPi);
        const auto hit = bump.ray_exit(x, {std::cos(a), std::sin(a)});
        const double residual =
            std::abs((hit.point - bump.base_point()).norm() - bump.omega(bump.phi_of(hit.point)));
        CHECK(residual < 1e-10 * bump.diameter());
    }
}

TEST_CASE("graph jets against Taylor oracles") {
    // Circle of radius 2: f(x) = 2 - sqrt(4 - x^2) = x^2/4 + x^4/64 + ...
    const auto disk2 = ConvexDomain2::disk({0.0, 2.0}, 2.0, {0.0, 1.0}, {0.0, -1.0});
    const auto j2 = disk2.graph_jet(0.0);
    CHECK(j2.f1 == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(j2.f2 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(j2.f3 == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(j2.f4 == doctest::Approx(3.0 / 8.0).epsilon(1e-9));

    // Ellipse x1^2/2 + (x2-1)^2 < 1 at (0,0): f = 1 - sqrt(1 - x^2/2).
    const auto ell = tall_ellipse();
    const auto je = ell.graph_jet(0.0);
    CHECK(je.f2 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(je.f3 == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(je.f4 == doctest::Approx(0.75).epsilon(1e-9));

    // Unit disk: f = 1 - sqrt(1 - x^2).
    const auto disk = unit_disk();
    const auto jd = disk.graph_jet(1.234);
    CHECK(jd.f2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(jd.f3 == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(jd.f4 == doctest::Approx(3.0).epsilon(1e-8));
}

TEST_CASE("graph jet f2 equals curvature everywhere") {
    const auto bump = bump_domain();
    for (int i = 0; i < 32; ++i) {
        const double phi = 2.0 * kPi * i / 32;
        const auto j = bump.graph_jet(phi);
        CHECK(j.f2 == doctest::Approx(bump.boundary_curvature(phi)).epsilon(1e-6));
        CHECK(std::abs(j.f1) < 1e-10);
    }
}

TEST_CASE("angle cosine bound") {
    const auto disk = unit_disk();
    const auto repc = disk.angle_cosine_bound({0.0, 0.0}, 256);
    CHECK(repc.min_cos == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(repc.bound == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(repc.satisfied);

    const auto disk2 = ConvexDomain2::disk({0.0, 2.0}, 2.0, {0.0, 1.0}, {0.0, -1.0});
    const auto rep2 = disk2.angle_cosine_bound({0.0, 1.0}, 512);
    CHECK(rep2.bound == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(rep2.min_cos == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-8));
    CHECK(rep2.satisfied);

    const auto bump = bump_domain();
    const auto repb = bump.angle_cosine_bound({0.0, 0.0}, 512);
    CHECK(repb.satisfied);
    CHECK(repb.min_cos >= 0.95 * repb.kappa_min);
}

TEST_CASE("non-convex radial profiles are rejected") {
    CHECK_THROWS_AS(ConvexDomain2::radial_fourier(1.0, {0.0, 0.0, 0.2}, {}, {0.0, 0.0},
                                                  {0.0, 0.0}, {1.0, 0.0}),
                    DomainError);
}

TEST_CASE("planar sections of quadric bodies") {
    const auto ball = ConvexBody3::ball({0.0, 0.0, 0.0}, 1.0);
    const auto disk = planar_section(ball, {0.0, 0.0, 0.0}, {1.0, 0.0, 0.0},
                                     {0.0, 1.0, 0.0});
    for (int i = 0; i < 16; ++i)
        CHECK(disk.omega(2.0 * kPi * i / 16) == doctest::Approx(1.0).epsilon(1e-12));

    const auto body = ConvexBody3::ellipsoid({0.0, 0.0, 0.0}, {1.0, 1.0, 2.0});
    const auto eq = planar_section(body, {0.0, 0.0, 0.0}, {1.0, 0.0, 0.0},
                                   {0.0, 1.0, 0.0});
    for (int i = 0; i < 16; ++i)
        CHECK(eq.omega(2.0 * kPi * i / 16) == doctest::Approx(1.0).epsilon(1e-12));

    // Section by the (axis-1, axis-3) plane: ellipse with semi-axes 1 and 2.
    const auto slice = planar_section(body, {0.0, 0.0, 0.0}, {1.0, 0.0, 0.0},
                                      {0.0, 0.0, 1.0});
    CHECK(slice.omega(0.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(slice.omega(kPi / 2.0) == doctest::Approx(2.0).epsilon(1e-12));

    CHECK_THROWS_AS(planar_section(body, {0.0, 0.0, 0.0}, {1.0, 0.0, 0.0},
                                   {2.0, 0.0, 0.0}),
                    InputError);
}

TEST_CASE("rebasing preserves the shape") {
    const auto disk2 = ConvexDomain2::disk({0.0, 2.0}, 2.0, {0.0, 2.0}, {1.0, 0.0});
    const auto moved = disk2.rebased({0.0, 1.0}, {0.0, -1.0});
    CHECK(moved.omega(0.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(moved.omega(kPi) == doctest::Approx(3.0).epsilon(1e-13));
    CHECK((moved.boundary_point(0.0) - Vec2(0.0, 0.0)).norm() < 1e-12);
}
