#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hgeo/convex_domain.hpp"

namespace hgeo {

/// Parsed form of the flat key=value config format. 2D kinds build a domain
/// directly; 3D kinds build a body and cut the section spanned by span_u and
/// span_v through o. phi_p is the angle (radians, from the +x axis of the
/// working plane, counterclockwise) of the direction from o to the
/// distinguished boundary point p.
struct DomainConfig {
    std::string kind;  // disk | ellipse | radial_fourier | ball3 | ellipsoid3

    double radius = 1.0;
    Vec2 center2 = Vec2::Zero();
    Vec2 semi_axes2 = Vec2::Ones();
    double a0 = 1.0;
    std::vector<double> cos_coeffs;
    std::vector<double> sin_coeffs;
    Vec2 o2 = Vec2::Zero();

    Vec3 center3 = Vec3::Zero();
    Vec3 semi_axes3 = Vec3::Ones();
    Vec3 o3 = Vec3::Zero();
    Vec3 span_u = Vec3(1.0, 0.0, 0.0);
    Vec3 span_v = Vec3(0.0, 1.0, 0.0);

    double phi_p = 0.0;

    bool is_3d() const { return kind == "ball3" || kind == "ellipsoid3"; }
};

struct ParseOutcome {
    std::optional<DomainConfig> config;
    std::vector<std::string> errors;  // "line N: message"
    bool ok() const { return errors.empty() && config.has_value(); }
};

/// Parse the documented key=value format: one or more `key=value` tokens per
/// line, values are comma-separated numbers (kind is a bare word), `#` starts
/// a comment. Unknown kinds, unknown or repeated keys, wrong arities, and
/// missing required fields are reported with line numbers.
ParseOutcome parse_domain_config(const std::string& text);

/// Canonical rendering; parsing it again yields an equivalent config.
std::string render_domain_config(const DomainConfig& cfg);

/// Construct the working domain: based at o, phi = 0 pointing along phi_p.
/// 3D kinds are cut to their planar section first (o maps to the section
/// origin). Throws DomainError/InputError for invalid geometry, including
/// failed convexity checks.
ConvexDomain2 build_domain(const DomainConfig& cfg);

} // namespace hgeo
