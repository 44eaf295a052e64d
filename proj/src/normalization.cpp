#include "hgeo/normalization.hpp"

#include <cmath>

#include "hgeo/errors.hpp"

namespace hgeo {

namespace {

struct CurvatureRange {
    double min;
    double max;
};

CurvatureRange curvature_range(const ConvexDomain2& dom, int samples) {
    CurvatureRange r{std::numeric_limits<double>::infinity(), 0.0};
    for (int i = 0; i < samples; ++i) {
        const double k = dom.boundary_curvature(2.0 * kPi * i / samples);
        r.min = std::min(r.min, k);
        r.max = std::max(r.max, k);
    }
    return r;
}

} // namespace

double third_derivative_shift(double f3, double k0, double tan_beta, double chord_h) {
    if (!(chord_h > 0.0)) throw InputError("third_derivative_shift: chord length <= 0");
    return f3 - tan_beta * k0 / chord_h;
}

NormalizationResult normalize(const ConvexDomain2& dom, const Vec2& o, double phi_p) {
    if (!dom.contains(o)) throw DomainError("normalize: o is not interior");
    const Vec2 p = dom.boundary_point(phi_p);

    // Radial view about o with phi = 0 toward p; gives omega_u, the far point,
    // and the chord length H through p and o.
    const ConvexDomain2 about_o = dom.rebased(o, p - o);
    const double omega_u = about_o.omega(0.0);
    const double chord_h = omega_u + about_o.omega(kPi);

    // Frame at p: x1 along the boundary tangent, x2 along the inward normal.
    const Vec2 tangent_p = about_o.boundary_tangent(0.0);
    const Vec2 n_in = rot90(tangent_p);
    Mat2 rot;
    rot << tangent_p.x(), tangent_p.y(), n_in.x(), n_in.y();
    const ProjectiveMap2 to_frame = ProjectiveMap2::affine(rot, -(rot * p));

    // Step 1: shear the direction p -> o onto the x2-axis.
    const Vec2 o_pf = to_frame.apply(o);
    const double alpha = std::atan2(o_pf.x(), o_pf.y());
    const ProjectiveMap2 step1 = ProjectiveMap2::shear_align(alpha);
    const ProjectiveMap2 map1 = step1.after(to_frame);

    const Vec2 o_tilde(0.0, omega_u);
    const ConvexDomain2 tilde =
        ConvexDomain2::mapped(dom, map1, o_tilde, Vec2(0.0, -1.0), dom.tag() + "~");

    // Step 2 parameters: slope of the boundary tangent at the far end (0, H)
    // of the axis chord, plus the angle-lemma bound on it.
    const Vec2 far_tangent = tilde.boundary_tangent(kPi);
    if (std::abs(far_tangent.x()) < 1e-12)
        throw SolverError("normalize: far tangent is vertical");
    const double tan_beta = -far_tangent.y() / far_tangent.x();
    const AngleBoundReport tilde_bound = tilde.angle_cosine_bound(o_tilde, 512);
    const double bound_arg =
        1.0 / (tilde_bound.kappa_min * tilde_bound.kappa_min * tilde_bound.omega0 *
               tilde_bound.omega0) - 1.0;
    const double tan_beta_bound = std::sqrt(std::max(0.0, bound_arg));

    const ProjectiveMap2 step2 = ProjectiveMap2::level_far_tangent(tan_beta, chord_h);
    const ProjectiveMap2 map2 = step2.after(map1);
    const ConvexDomain2 bar =
        ConvexDomain2::mapped(dom, map2, o_tilde, Vec2(0.0, -1.0), dom.tag() + "-");
    const double kbar0 = bar.boundary_curvature(0.0);

    // Step 3: scale so the curvature at the origin becomes 1/2.
    const ProjectiveMap2 step3 = ProjectiveMap2::axis_scale(omega_u, kbar0);
    const ProjectiveMap2 full = step3.after(map2);

    const Vec2 o_image = full.apply(o);
    ConvexDomain2 normalized =
        ConvexDomain2::mapped(dom, full, o_image, Vec2(0.0, -1.0),
                              dom.tag() + "_normalized");

    NormalizationReport rep;
    rep.alpha = alpha;
    rep.tan_beta = tan_beta;
    rep.tan_beta_bound = tan_beta_bound;
    rep.omega_u = omega_u;
    rep.chord_h = chord_h;
    rep.kbar0 = kbar0;
    rep.o_image = o_image;
    rep.omega_hat0 = normalized.omega(0.0);
    rep.p_image_residual = full.apply(p).norm();

    const Vec2 tangent_hat = normalized.boundary_tangent(0.0);
    rep.tangent_slope = tangent_hat.y() / tangent_hat.x();

    const BoundaryJet gj = normalized.graph_jet(0.0);
    rep.f2_normalized = gj.f2;
    rep.f3_normalized = gj.f3;
    rep.f4_normalized = gj.f4;
    if (std::abs(gj.f2 - 0.5) > 1e-6)
        throw SolverError("normalize: curvature at the image of p is " +
                          std::to_string(gj.f2) + " instead of 1/2");

    const CurvatureRange range = curvature_range(normalized, normalized.analytic() ? 1024 : 256);
    rep.curvature_max = range.max;
    rep.curvature_min = range.min;

    return {full, std::move(normalized), rep};
}

} // namespace hgeo
