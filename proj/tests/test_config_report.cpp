#include <doctest.h>

#include <cmath>

#include "hgeo/config.hpp"
#include "hgeo/errors.hpp"
#include "hgeo/report.hpp"
#include "hgeo/verify.hpp"

using namespace hgeo;

TEST_CASE("parsing the documented one-line form") {
    const auto out = parse_domain_config("kind=disk radius=1 center=0,0 o=0,0");
    REQUIRE(out.ok());
    CHECK(out.config->kind == "disk");
    CHECK(out.config->radius == 1.0);
    CHECK(out.config->o2 == Vec2(0.0, 0.0));
    CHECK(out.config->phi_p == 0.0);
    CHECK(build_domain(*out.config).omega(0.0) == doctest::Approx(1.0));
}

TEST_CASE("parsing multi-line configs with comments") {
    const std::string text =
        "# bump profile\n"
        "kind=radial_fourier\n"
        "a0=1\n"
        "cos3=0.05  # third harmonic\n"
        "o=0,0\n";
    const auto out = parse_domain_config(text);
    REQUIRE(out.ok());
    CHECK(out.config->cos_coeffs.size() == 3);
    CHECK(out.config->cos_coeffs[2] == 0.05);
    const auto dom = build_domain(*out.config);
    CHECK(dom.omega(0.0) == doctest::Approx(1.05));
}

TEST_CASE("parse errors carry line numbers") {
    const auto out = parse_domain_config(
        "kind=disk\nradius=abc\ncenter=0,0\no=0,0\nwhat=1\n");
    CHECK_FALSE(out.ok());
    REQUIRE(out.errors.size() == 2);
    CHECK(out.errors[0].find("line 2") != std::string::npos);
    CHECK(out.errors[1].find("line 5") != std::string::npos);

    CHECK_FALSE(parse_domain_config("kind=heptagon o=0,0").ok());
    CHECK_FALSE(parse_domain_config("radius=1").ok());          // kind missing
    CHECK_FALSE(parse_domain_config("kind=disk radius=1,2 center=0,0 o=0,0").ok());
    CHECK_FALSE(parse_domain_config("kind=disk radius=1 radius=2 center=0,0 o=0,0").ok());
}

TEST_CASE("non-convex parameters are rejected at build time") {
    const auto out = parse_domain_config("kind=radial_fourier a0=1 cos3=0.2 o=0,0");
    REQUIRE(out.ok());
    CHECK_THROWS_AS(build_domain(*out.config), DomainError);
}

TEST_CASE("render and re-parse round trip") {
    for (const std::string& text :
         {std::string("kind=disk radius=2 center=0,2 o=0,1 phi_p=-1.5707963267948966"),
          std::string("kind=ellipse semi_axes=1.4142135623730951,1 center=0,1 o=0,1"),
          std::string("kind=radial_fourier a0=1 cos3=0.05 sin2=0.01 o=0.1,0"),
          std::string("kind=ellipsoid3 semi_axes=1,1,2 center=0,0,0 o=0.15,0.1,0.4 "
                      "span_u=0.1,-0.05,-1 span_v=1,0.2,0")}) {
        const auto first = parse_domain_config(text);
        REQUIRE(first.ok());
        const auto second = parse_domain_config(render_domain_config(*first.config));
        REQUIRE(second.ok());
        CHECK(render_domain_config(*second.config) == render_domain_config(*first.config));
    }
}

TEST_CASE("empty check selection yields an empty passing report") {
    const auto dom = build_domain(
        *parse_domain_config("kind=disk radius=1 center=0,0 o=0,0").config);
    SuiteOptions opt;  // no groups
    const SuiteResult res = run_suite(dom, opt);
    CHECK(res.report.checks().empty());
    CHECK(res.report.exit_code() == 0);

    SuiteOptions bad;
    bad.groups = {"nonsense"};
    CHECK_THROWS_AS(run_suite(dom, bad), InputError);
}

TEST_CASE("suite output is deterministic for a fixed seed") {
    const auto dom = build_domain(
        *parse_domain_config("kind=disk radius=2 center=0,2 o=0,1 "
                             "phi_p=-1.5707963267948966").config);
    SuiteOptions opt;
    opt.groups = {"geometry", "metric", "spheres"};
    opt.seed = 7;
    const SuiteResult a = run_suite(dom, opt);
    const SuiteResult b = run_suite(dom, opt);
    CHECK(a.report.machine_text() == b.report.machine_text());
    REQUIRE(a.sweep.has_value());
    CHECK(sweep_csv(*a.sweep) == sweep_csv(*b.sweep));

    opt.seed = 8;  // sampled values move, statuses stay
    const SuiteResult c = run_suite(dom, opt);
    CHECK(c.report.machine_text() != a.report.machine_text());
    CHECK(c.report.failures() == 0);
}

TEST_CASE("csv schema") {
    SweepTable table;
    SweepRow row;
    row.r = 1.0;
    row.x2 = 0.25;
    row.k_n = 1.5;
    row.k_r = 1.25;
    row.k_f = 1.125;
    row.gap_err = 1e-3;
    row.ok = true;
    table.rows.push_back(row);
    const std::string csv = sweep_csv(table);
    CHECK(csv.rfind("r,x2,k_n,k_R,k_F,gap_err\n", 0) == 0);
    CHECK(csv.find("\n1,0.25,1.5,1.25,1.125,0.001") != std::string::npos);
}

TEST_CASE("failures switch the exit code, diagnostics do not") {
    VerificationReport rep;
    rep.add_diagnostic("d", 3.0, 1.0, "ignored");
    CHECK(rep.exit_code() == 0);
    rep.add_pass_fail("p", true, 0.0, 0.0, 0.0);
    CHECK(rep.exit_code() == 0);
    rep.add_pass_fail("f", false, 9.0, 1.0, 1e-6, "boom");
    CHECK(rep.exit_code() == 1);
    CHECK(rep.failures() == 1);
    CHECK(rep.passes() == 1);
    CHECK(rep.diagnostics() == 1);
    CHECK(rep.machine_text().find("check id=f status=FAIL value=9") != std::string::npos);
}
