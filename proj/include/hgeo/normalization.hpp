#pragma once

#include "hgeo/convex_domain.hpp"
#include "hgeo/projective.hpp"

namespace hgeo {

/// Everything measured while assembling the three-step normalization map.
struct NormalizationReport {
    double alpha = 0.0;          // shear angle of step 1
    double tan_beta = 0.0;       // far-tangent slope leveled by step 2
    double tan_beta_bound = 0.0; // sqrt(1/(k~^2 w~0^2) - 1)
    double omega_u = 0.0;        // distance from o to p
    double chord_h = 0.0;        // chord length through p and o
    double kbar0 = 0.0;          // boundary curvature at p before step 3
    double curvature_max = 0.0;  // max curvature of the normalized boundary (sweep)
    double curvature_min = 0.0;
    double f2_normalized = 0.0;  // should be 1/2
    double f3_normalized = 0.0;
    double f4_normalized = 0.0;
    double omega_hat0 = 0.0;     // distance from the image of o to p (reported as-is)
    double p_image_residual = 0.0;  // |P(p)| in normalized coordinates
    double tangent_slope = 0.0;     // boundary slope at the image of p
    Vec2 o_image = Vec2::Zero();
};

struct NormalizationResult {
    ProjectiveMap2 map;     // world coordinates -> normalized coordinates
    ConvexDomain2 domain;   // normalized domain about the image of o
    NormalizationReport report;
};

/// Compose shear, far-tangent leveling, and axis scaling so that in the image
/// the boundary through the image of p is the graph x2 = f(x1) with f(0) = 0,
/// f'(0) = 0, f''(0) = 1/2, the segment from the image of o to the image of p
/// lies on the x2-axis, and the tangents at the two ends of that axis chord
/// are parallel. All step parameters are measured from the domain itself.
NormalizationResult normalize(const ConvexDomain2& dom, const Vec2& o, double phi_p);

/// Change of the third graph derivative under the far-tangent leveling step:
/// f3 - tan_beta * k0 / chord_h.
double third_derivative_shift(double f3, double k0, double tan_beta, double chord_h);

} // namespace hgeo
