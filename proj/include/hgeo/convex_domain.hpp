#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hgeo/geometry.hpp"
#include "hgeo/jet.hpp"
#include "hgeo/projective.hpp"

namespace hgeo {

/// Boundary written locally as a graph over its tangent line, in the frame
/// (tangent, inward normal): v = f(u) with f(0) = 0, f'(0) = 0.
struct BoundaryJet {
    double f1 = 0.0;  // 0 by construction
    double f2 = 0.0;
    double f3 = 0.0;
    double f4 = 0.0;
    double kappa = 0.0;  // Euclidean curvature; equals f2 here
};

struct RayHit {
    double t;    // exit parameter: x + t*y is on the boundary, t > 0
    Vec2 point;  // the exit point
};

struct ChordInfo {
    Vec2 x_plus;
    Vec2 x_minus;
    double r_plus;   // Euclidean distance from the query point to x_plus
    double r_minus;  // ... to x_minus
    double length() const { return r_plus + r_minus; }
};

struct AngleBoundReport {
    double min_cos;    // min over the boundary of cos(radial dir, outward normal)
    double omega0;     // Euclidean distance from o to the boundary
    double kappa_min;  // minimal boundary curvature
    double bound;      // omega0 * kappa_min
    double worst_phi;
    bool satisfied;    // min_cos >= bound - 1e-8
};

/// Shape realization in world coordinates. Cores answer radial queries about
/// an arbitrary interior base point, which is what lets a domain be re-based
/// or projectively mapped without re-fitting anything.
class ShapeCore {
public:
    virtual ~ShapeCore() = default;

    /// Distance from x to the boundary along unit-independent direction y,
    /// expressed as the ray parameter t (x + t*y on the boundary, t > 0).
    virtual double ray_exit_param(const Vec2& x, const Vec2& y) const = 0;

    /// Radial distance with derivatives in phi, measured about `base` with
    /// phi counted counterclockwise from `ref`.
    virtual Jet4 radial_jet(const Vec2& base, const Vec2& ref, double phi) const = 0;
    virtual Jet4 radial_jet2(const Vec2& base, const Vec2& ref, double phi) const;

    virtual bool contains(const Vec2& x) const = 0;
    virtual bool analytic() const = 0;
    virtual bool is_quadric() const { return false; }
};

/// A bounded strictly convex planar domain represented by a radial boundary
/// function omega(phi) about an interior base point. phi = 0 points along
/// ref_dir (toward the distinguished boundary point when one is set) and is
/// measured counterclockwise.
class ConvexDomain2 {
public:
    static ConvexDomain2 disk(const Vec2& center, double radius, const Vec2& base,
                              const Vec2& ref_dir);
    /// Axis-aligned ellipse with the given semi-axes.
    static ConvexDomain2 ellipse(const Vec2& center, double semi_a, double semi_b,
                                 const Vec2& base, const Vec2& ref_dir);
    /// General quadric domain (x-c)^T M (x-c) < 1 with M symmetric positive
    /// definite.
    static ConvexDomain2 quadric(const Mat2& form, const Vec2& center, const Vec2& base,
                                 const Vec2& ref_dir, const std::string& tag);
    /// omega(theta) = a0 + sum_k cos_k cos(k theta) + sin_k sin(k theta),
    /// theta the world angle about `center`.
    static ConvexDomain2 radial_fourier(double a0, const std::vector<double>& cos_coeffs,
                                        const std::vector<double>& sin_coeffs,
                                        const Vec2& center, const Vec2& base,
                                        const Vec2& ref_dir);
    /// The image of `inner` under `map`. Quadrics compose exactly into new
    /// quadrics; other shapes are queried through the map (boundary points are
    /// re-solved on demand, derivative data is rebuilt numerically).
    static ConvexDomain2 mapped(const ConvexDomain2& inner, const ProjectiveMap2& map,
                                const Vec2& base, const Vec2& ref_dir,
                                const std::string& tag);

    const Vec2& base_point() const { return base_; }
    const Vec2& ref_dir() const { return ref_; }
    const std::string& tag() const { return tag_; }
    bool analytic() const { return core_->analytic(); }
    bool is_quadric() const { return core_->is_quadric(); }
    const ShapeCore& core() const { return *core_; }

    double diameter() const { return diameter_; }
    double omega_max() const { return omega_max_; }
    double omega_min() const { return omega_min_; }

    Vec2 direction(double phi) const;
    double phi_of(const Vec2& world_point) const;

    double omega(double phi) const;
    Jet4 omega_jet(double phi) const;   // orders 0..4
    Jet4 omega_jet2(double phi) const;  // orders 0..2

    Vec2 boundary_point(double phi) const;
    Vec2 boundary_tangent(double phi) const;  // unit, counterclockwise
    Vec2 outward_normal(double phi) const;
    /// Euclidean curvature (omega^2 + 2 omega'^2 - omega omega'') /
    /// (omega^2 + omega'^2)^{3/2}; throws DomainError when non-positive.
    double boundary_curvature(double phi) const;
    BoundaryJet graph_jet(double phi) const;

    bool contains(const Vec2& x) const;

    RayHit ray_exit(const Vec2& x, const Vec2& y) const;
    ChordInfo chord(const Vec2& x, const Vec2& y) const;
    /// Length of the chord through a boundary point in direction w (w must
    /// point into the domain there).
    double chord_through_boundary(const Vec2& boundary_pt, const Vec2& w) const;

    /// Same shape, radial representation about a different interior point.
    ConvexDomain2 rebased(const Vec2& new_base, const Vec2& new_ref_dir) const;

    AngleBoundReport angle_cosine_bound(const Vec2& o, int samples = 1024) const;

private:
    ConvexDomain2(std::shared_ptr<const ShapeCore> core, Vec2 base, Vec2 ref,
                  std::string tag);

    void validate_and_cache();

    std::shared_ptr<const ShapeCore> core_;
    Vec2 base_;
    Vec2 ref_;
    Vec2 perp_;  // rot90(ref_)
    std::string tag_;
    double omega_max_ = 0.0;
    double omega_min_ = 0.0;
    double diameter_ = 0.0;
};

} // namespace hgeo
