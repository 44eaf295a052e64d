#include "hgeo/convex_domain.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "hgeo/errors.hpp"
#include "hgeo/numerics.hpp"

namespace hgeo {

Jet4 ShapeCore::radial_jet2(const Vec2& base, const Vec2& ref, double phi) const {
    Jet4 j = radial_jet(base, ref, phi);
    j.d3 = 0.0;
    j.d4 = 0.0;
    return j;
}

namespace {

Vec2 frame_dir(const Vec2& ref, const Vec2& perp, double phi) {
    return std::cos(phi) * ref + std::sin(phi) * perp;
}

/// Domain (x-c)^T M (x-c) < 1 with M symmetric positive definite.
class QuadricCore final : public ShapeCore {
public:
    QuadricCore(const Mat2& form, const Vec2& center) : m_(form), c_(center) {
        if (std::abs(m_(0, 1) - m_(1, 0)) > 1e-12 * m_.cwiseAbs().maxCoeff())
            throw InputError("quadric form must be symmetric");
        m_(0, 1) = m_(1, 0) = 0.5 * (m_(0, 1) + m_(1, 0));
        if (!(m_(0, 0) > 0.0) || !(m_.determinant() > 0.0))
            throw InputError("quadric form must be positive definite");
    }

    double quadratic(const Vec2& x) const {
        const Vec2 w = x - c_;
        return w.dot(m_ * w);
    }

    double ray_exit_param(const Vec2& x, const Vec2& y) const override {
        const Vec2 w = x - c_;
        const double q2 = y.dot(m_ * y);
        const double q1 = y.dot(m_ * w);
        const double q0 = w.dot(m_ * w) - 1.0;
        const double disc = q1 * q1 - q2 * q0;
        if (!(disc > 0.0)) throw SolverError("quadric ray has no forward exit");
        return (-q1 + std::sqrt(disc)) / q2;
    }

    Jet4 radial_jet(const Vec2& base, const Vec2& ref, double phi) const override {
        const Vec2 perp = rot90(ref);
        const Jet4 ang(phi, 1.0, 0.0, 0.0, 0.0);
        const Jet4 cs = cos(ang), sn = sin(ang);
        const Jet4 dx = cs * ref.x() + sn * perp.x();
        const Jet4 dy = cs * ref.y() + sn * perp.y();
        const Vec2 w = base - c_;
        const Vec2 mw = m_ * w;
        // A = d^T M d, B = w^T M d, C = w^T M w - 1 < 0 inside.
        const Jet4 a = m_(0, 0) * dx * dx + 2.0 * m_(0, 1) * dx * dy +
                       m_(1, 1) * dy * dy;
        const Jet4 b = mw.x() * dx + mw.y() * dy;
        const double c0 = w.dot(mw) - 1.0;
        return (sqrt(b * b - c0 * a) - b) / a;
    }

    bool contains(const Vec2& x) const override { return quadratic(x) < 1.0; }
    bool analytic() const override { return true; }
    bool is_quadric() const override { return true; }

    const Mat2& form() const { return m_; }
    const Vec2& center() const { return c_; }

private:
    Mat2 m_;
    Vec2 c_;
};

/// omega(theta) = a0 + sum_k (cos_k cos(k theta) + sin_k sin(k theta)) about a
/// fixed center, theta the world polar angle.
class FourierCore final : public ShapeCore {
public:
    FourierCore(double a0, std::vector<double> ck, std::vector<double> sk,
                const Vec2& center)
        : a0_(a0), ck_(std::move(ck)), sk_(std::move(sk)), c_(center) {
        omega_bound_ = a0_;
        double dev = 0.0;
        for (double v : ck_) dev += std::abs(v);
        for (double v : sk_) dev += std::abs(v);
        omega_bound_ += dev;
        if (!(a0_ - dev > 0.0))
            throw InputError("radial Fourier profile is not positive");
    }

    Jet4 series(const Jet4& theta) const {
        Jet4 r = Jet4::constant(a0_);
        for (std::size_t k = 0; k < ck_.size(); ++k)
            if (ck_[k] != 0.0) r = r + ck_[k] * cos(static_cast<double>(k + 1) * theta);
        for (std::size_t k = 0; k < sk_.size(); ++k)
            if (sk_[k] != 0.0) r = r + sk_[k] * sin(static_cast<double>(k + 1) * theta);
        return r;
    }

    double value(double theta) const { return series(Jet4::constant(theta)).f; }

    double deriv1(double theta) const {
        double r = 0.0;
        for (std::size_t k = 0; k < ck_.size(); ++k) {
            const double kk = static_cast<double>(k + 1);
            r -= ck_[k] * kk * std::sin(kk * theta);
        }
        for (std::size_t k = 0; k < sk_.size(); ++k) {
            const double kk = static_cast<double>(k + 1);
            r += sk_[k] * kk * std::cos(kk * theta);
        }
        return r;
    }

    double ray_exit_param(const Vec2& x, const Vec2& y) const override {
        const double ny = y.norm();
        // Beyond t_hi the point is certainly outside: |z| > max omega.
        const double t_hi = ((x - c_).norm() + 1.25 * omega_bound_) / ny;
        auto g = [&](double t) {
            const Vec2 z = x + t * y - c_;
            return z.norm() - value(angle_of(z));
        };
        auto dg = [&](double t) {
            const Vec2 z = x + t * y - c_;
            const double r2 = z.squaredNorm();
            return z.dot(y) / std::sqrt(r2) - deriv1(angle_of(z)) * cross2(z, y) / r2;
        };
        return solve_newton_bisect(g, dg, 0.0, t_hi, 1e-13);
    }

    Jet4 radial_jet(const Vec2& base, const Vec2& ref, double phi) const override {
        if ((base - c_).norm() < 1e-14 * (1.0 + c_.norm())) {
            // Natural center: the world angle is phi plus a constant offset.
            const Jet4 theta(angle_of(ref) + phi, 1.0, 0.0, 0.0, 0.0);
            return series(theta);
        }
        const Vec2 perp = rot90(ref);
        return numeric_jet4(
            [&](double p) { return ray_exit_param(base, frame_dir(ref, perp, p)); }, phi);
    }

    Jet4 radial_jet2(const Vec2& base, const Vec2& ref, double phi) const override {
        if ((base - c_).norm() < 1e-14 * (1.0 + c_.norm())) return radial_jet(base, ref, phi);
        const Vec2 perp = rot90(ref);
        return numeric_jet2(
            [&](double p) { return ray_exit_param(base, frame_dir(ref, perp, p)); }, phi);
    }

    bool contains(const Vec2& x) const override {
        const Vec2 z = x - c_;
        const double r = z.norm();
        if (r < 1e-300) return true;
        return r < value(angle_of(z));
    }

    bool analytic() const override { return true; }

private:
    double a0_;
    std::vector<double> ck_;
    std::vector<double> sk_;
    Vec2 c_;
    double omega_bound_;
};

/// Projective image of another domain. Rays are solved by pulling the line
/// back through the map, solving in the inner domain, and pushing the exit
/// point forward; radial derivatives are rebuilt numerically.
class MappedCore final : public ShapeCore {
public:
    MappedCore(ConvexDomain2 inner, const ProjectiveMap2& map)
        : inner_(std::move(inner)), map_(map), inv_(map.inverse()) {}

    double ray_exit_param(const Vec2& x, const Vec2& y) const override {
        const Vec2 xi = inv_.apply(x);
        const Vec2 yi = inv_.differential(x, y);
        const RayHit hit = inner_.ray_exit(xi, yi);
        const Vec2 exit = map_.apply(hit.point);
        const Vec2 d = exit - x;
        const double t = d.norm() / y.norm();
        if (!(d.dot(y) > 0.0))
            throw SolverError("mapped ray exit reversed orientation (horizon inside?)");
        return t;
    }

    Jet4 radial_jet(const Vec2& base, const Vec2& ref, double phi) const override {
        const Vec2 perp = rot90(ref);
        return numeric_jet4(
            [&](double p) { return ray_exit_param(base, frame_dir(ref, perp, p)); }, phi);
    }

    Jet4 radial_jet2(const Vec2& base, const Vec2& ref, double phi) const override {
        const Vec2 perp = rot90(ref);
        return numeric_jet2(
            [&](double p) { return ray_exit_param(base, frame_dir(ref, perp, p)); }, phi);
    }

    bool contains(const Vec2& x) const override {
        try {
            return inner_.contains(inv_.apply(x));
        } catch (const HorizonError&) {
            return false;  // the bounded image never reaches the horizon
        }
    }

    bool analytic() const override { return false; }

private:
    ConvexDomain2 inner_;
    ProjectiveMap2 map_;
    ProjectiveMap2 inv_;
};

/// Homogeneous conic matrix of the boundary (x-c)^T M (x-c) = 1.
Mat3 conic_matrix(const Mat2& m, const Vec2& c) {
    Mat3 q = Mat3::Zero();
    q.topLeftCorner<2, 2>() = m;
    q.topRightCorner<2, 1>() = -m * c;
    q.bottomLeftCorner<1, 2>() = (-m * c).transpose();
    q(2, 2) = c.dot(m * c) - 1.0;
    return q;
}

/// Extract (M, c) from a homogeneous conic of an ellipse.
std::pair<Mat2, Vec2> conic_to_quadric(const Mat3& q_in) {
    Mat3 q = 0.5 * (q_in + q_in.transpose());
    if (q.topLeftCorner<2, 2>().trace() < 0.0) q = -q;
    const Mat2 m0 = q.topLeftCorner<2, 2>();
    if (!(m0(0, 0) > 0.0) || !(m0.determinant() > 0.0))
        throw SolverError("projective image of the quadric is not an ellipse");
    const Vec2 b = q.topRightCorner<2, 1>();
    const Vec2 center = -m0.inverse() * b;
    const double v0 = q(2, 2) + b.dot(center);  // value at the center
    if (!(v0 < 0.0)) throw SolverError("projective image of the quadric is degenerate");
    return {Mat2(m0 / (-v0)), center};
}

} // namespace

ConvexDomain2::ConvexDomain2(std::shared_ptr<const ShapeCore> core, Vec2 base, Vec2 ref,
                             std::string tag)
    : core_(std::move(core)), base_(std::move(base)), ref_(std::move(ref)),
      tag_(std::move(tag)) {
    const double n = ref_.norm();
    if (!(n > 0.0)) throw InputError("reference direction must be nonzero");
    ref_ /= n;
    perp_ = rot90(ref_);
    validate_and_cache();
}

void ConvexDomain2::validate_and_cache() {
    if (!core_->contains(base_))
        throw DomainError("base point is not interior to the domain");

    const int n_radii = 1024;
    omega_min_ = std::numeric_limits<double>::infinity();
    omega_max_ = 0.0;
    std::vector<double> w(n_radii);
    for (int i = 0; i < n_radii; ++i) {
        const double phi = 2.0 * kPi * i / n_radii;
        w[i] = core_->ray_exit_param(base_, direction(phi));
        omega_min_ = std::min(omega_min_, w[i]);
        omega_max_ = std::max(omega_max_, w[i]);
    }
    diameter_ = 0.0;
    for (int i = 0; i < n_radii / 2; ++i)
        diameter_ = std::max(diameter_, w[i] + w[i + n_radii / 2]);
    if (!(omega_min_ > 0.0)) throw DomainError("radial function is not positive");

    // Radial convexity: omega^2 + 2 omega'^2 - omega omega'' > 0 everywhere.
    const int n = analytic() ? 4096 : 512;
    auto numerator = [&](double phi) {
        const Jet4 j = omega_jet2(phi);
        return j.f * j.f + 2.0 * j.d1 * j.d1 - j.f * j.d2;
    };
    double worst = std::numeric_limits<double>::infinity();
    double worst_phi = 0.0;
    for (int i = 0; i < n; ++i) {
        const double phi = 2.0 * kPi * i / n;
        const double v = numerator(phi);
        if (v < worst) { worst = v; worst_phi = phi; }
    }
    // Refine around the sampled minimum.
    double lo = worst_phi - 2.0 * kPi / n, hi = worst_phi + 2.0 * kPi / n;
    for (int it = 0; it < 50; ++it) {
        const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
        if (numerator(m1) < numerator(m2)) hi = m2; else lo = m1;
    }
    const double refined = numerator(0.5 * (lo + hi));
    worst = std::min(worst, refined);
    if (!(worst > 0.0))
        throw DomainError("domain is not strictly convex: curvature <= 0 near phi = " +
                          std::to_string(0.5 * (lo + hi)));
}

ConvexDomain2 ConvexDomain2::disk(const Vec2& center, double radius, const Vec2& base,
                                  const Vec2& ref_dir) {
    if (!(radius > 0.0)) throw InputError("disk radius must be > 0");
    return quadric(Mat2::Identity() / (radius * radius), center, base, ref_dir, "disk");
}

ConvexDomain2 ConvexDomain2::ellipse(const Vec2& center, double semi_a, double semi_b,
                                     const Vec2& base, const Vec2& ref_dir) {
    if (!(semi_a > 0.0) || !(semi_b > 0.0))
        throw InputError("ellipse semi-axes must be > 0");
    Mat2 m = Mat2::Zero();
    m(0, 0) = 1.0 / (semi_a * semi_a);
    m(1, 1) = 1.0 / (semi_b * semi_b);
    return quadric(m, center, base, ref_dir, "ellipse");
}

ConvexDomain2 ConvexDomain2::quadric(const Mat2& form, const Vec2& center,
                                     const Vec2& base, const Vec2& ref_dir,
                                     const std::string& tag) {
    return ConvexDomain2(std::make_shared<QuadricCore>(form, center), base, ref_dir, tag);
}

ConvexDomain2 ConvexDomain2::radial_fourier(double a0, const std::vector<double>& cosc,
                                            const std::vector<double>& sinc,
                                            const Vec2& center, const Vec2& base,
                                            const Vec2& ref_dir) {
    return ConvexDomain2(std::make_shared<FourierCore>(a0, cosc, sinc, center), base,
                         ref_dir, "radial_fourier");
}

ConvexDomain2 ConvexDomain2::mapped(const ConvexDomain2& inner, const ProjectiveMap2& map,
                                    const Vec2& base, const Vec2& ref_dir,
                                    const std::string& tag) {
    if (inner.is_quadric()) {
        const auto* qc = dynamic_cast<const QuadricCore*>(&inner.core());
        const Mat3 q = conic_matrix(qc->form(), qc->center());
        const Mat3& pinv = map.inverse_matrix();
        const auto [m, c] = conic_to_quadric(pinv.transpose() * q * pinv);
        return ConvexDomain2(std::make_shared<QuadricCore>(m, c), base, ref_dir, tag);
    }
    return ConvexDomain2(std::make_shared<MappedCore>(inner, map), base, ref_dir, tag);
}

Vec2 ConvexDomain2::direction(double phi) const { return frame_dir(ref_, perp_, phi); }

double ConvexDomain2::phi_of(const Vec2& world_point) const {
    const Vec2 v = world_point - base_;
    return std::atan2(cross2(ref_, v), ref_.dot(v));
}

double ConvexDomain2::omega(double phi) const {
    return core_->ray_exit_param(base_, direction(phi));
}

Jet4 ConvexDomain2::omega_jet(double phi) const {
    return core_->radial_jet(base_, ref_, phi);
}

Jet4 ConvexDomain2::omega_jet2(double phi) const {
    return core_->radial_jet2(base_, ref_, phi);
}

Vec2 ConvexDomain2::boundary_point(double phi) const {
    return base_ + omega(phi) * direction(phi);
}

Vec2 ConvexDomain2::boundary_tangent(double phi) const {
    const Jet4 j = omega_jet2(phi);
    const Vec2 d = direction(phi);
    const Vec2 t = j.d1 * d + j.f * rot90(d);
    return t.normalized();
}

Vec2 ConvexDomain2::outward_normal(double phi) const {
    const Vec2 t = boundary_tangent(phi);
    return Vec2(t.y(), -t.x());
}

double ConvexDomain2::boundary_curvature(double phi) const {
    const Jet4 j = omega_jet2(phi);
    const double num = j.f * j.f + 2.0 * j.d1 * j.d1 - j.f * j.d2;
    const double den = std::pow(j.f * j.f + j.d1 * j.d1, 1.5);
    const double kappa = num / den;
    if (!(kappa > 0.0))
        throw DomainError("boundary curvature non-positive at phi = " +
                          std::to_string(phi));
    return kappa;
}

BoundaryJet ConvexDomain2::graph_jet(double phi) const {
    const Jet4 w = omega_jet(phi);
    const Jet4 ang(phi, 1.0, 0.0, 0.0, 0.0);
    const Jet4 cs = cos(ang), sn = sin(ang);
    const Jet4 gx = w * (cs * ref_.x() + sn * perp_.x());
    const Jet4 gy = w * (cs * ref_.y() + sn * perp_.y());

    const Vec2 tangent = Vec2(gx.d1, gy.d1).normalized();
    const Vec2 n_in = rot90(tangent);

    const Jet4 u = (gx - gx.f) * tangent.x() + (gy - gy.f) * tangent.y();
    const Jet4 v = (gx - gx.f) * n_in.x() + (gy - gy.f) * n_in.y();

    const double a1 = u.d1, a2 = u.d2 / 2.0, a3 = u.d3 / 6.0, a4 = u.d4 / 24.0;
    const double b1 = v.d1, b2 = v.d2 / 2.0, b3 = v.d3 / 6.0, b4 = v.d4 / 24.0;

    // v(s) = f(u(s)): solve the Taylor composition for the graph coefficients.
    const double c1 = b1 / a1;
    const double c2 = (b2 - c1 * a2) / (a1 * a1);
    const double c3 = (b3 - c1 * a3 - 2.0 * c2 * a1 * a2) / (a1 * a1 * a1);
    const double c4 = (b4 - c1 * a4 - c2 * (a2 * a2 + 2.0 * a1 * a3) -
                       3.0 * c3 * a1 * a1 * a2) / (a1 * a1 * a1 * a1);

    BoundaryJet out;
    out.f1 = c1;
    out.f2 = 2.0 * c2;
    out.f3 = 6.0 * c3;
    out.f4 = 24.0 * c4;
    const double num = w.f * w.f + 2.0 * w.d1 * w.d1 - w.f * w.d2;
    out.kappa = num / std::pow(w.f * w.f + w.d1 * w.d1, 1.5);
    return out;
}

bool ConvexDomain2::contains(const Vec2& x) const { return core_->contains(x); }

RayHit ConvexDomain2::ray_exit(const Vec2& x, const Vec2& y) const {
    if (!(y.norm() > 0.0)) throw InputError("ray direction must be nonzero");
    if (!contains(x)) throw DomainError("ray origin is not interior to the domain");
    const double t = core_->ray_exit_param(x, y);
    return {t, x + t * y};
}

ChordInfo ConvexDomain2::chord(const Vec2& x, const Vec2& y) const {
    const RayHit fwd = ray_exit(x, y);
    const RayHit bwd = ray_exit(x, Vec2(-y));
    ChordInfo c;
    c.x_plus = fwd.point;
    c.x_minus = bwd.point;
    c.r_plus = (fwd.point - x).norm();
    c.r_minus = (bwd.point - x).norm();
    return c;
}

double ConvexDomain2::chord_through_boundary(const Vec2& boundary_pt, const Vec2& w) const {
    const Vec2 dir = w.normalized();
    double s = 1e-7 * diameter_;
    Vec2 x_in = boundary_pt + s * dir;
    int guard = 0;
    while (!contains(x_in)) {
        s *= 2.0;
        x_in = boundary_pt + s * dir;
        if (++guard > 60 || s > diameter_)
            throw DomainError("chord direction does not enter the domain");
    }
    return chord(x_in, dir).length();
}

ConvexDomain2 ConvexDomain2::rebased(const Vec2& new_base, const Vec2& new_ref_dir) const {
    return ConvexDomain2(core_, new_base, new_ref_dir, tag_);
}

AngleBoundReport ConvexDomain2::angle_cosine_bound(const Vec2& o, int samples) const {
    if (!contains(o)) throw DomainError("angle bound base point is not interior");

    auto cos_at = [&](double phi) {
        const Vec2 p = boundary_point(phi);
        return (p - o).normalized().dot(outward_normal(phi));
    };
    auto dist_at = [&](double phi) { return (boundary_point(phi) - o).norm(); };
    auto kappa_at = [&](double phi) { return boundary_curvature(phi); };

    auto scan_min = [&](const ScalarFn& f) {
        double best = std::numeric_limits<double>::infinity();
        double best_phi = 0.0;
        for (int i = 0; i < samples; ++i) {
            const double phi = 2.0 * kPi * i / samples;
            const double v = f(phi);
            if (v < best) { best = v; best_phi = phi; }
        }
        double lo = best_phi - 2.0 * kPi / samples, hi = best_phi + 2.0 * kPi / samples;
        for (int it = 0; it < 60; ++it) {
            const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
            if (f(m1) < f(m2)) hi = m2; else lo = m1;
        }
        const double refined = f(0.5 * (lo + hi));
        return std::make_pair(std::min(best, refined), 0.5 * (lo + hi));
    };

    AngleBoundReport rep;
    const auto [min_cos, worst_phi] = scan_min(cos_at);
    rep.min_cos = min_cos;
    rep.worst_phi = worst_phi;
    rep.omega0 = scan_min(dist_at).first;
    rep.kappa_min = scan_min(kappa_at).first;
    rep.bound = rep.omega0 * rep.kappa_min;
    rep.satisfied = rep.min_cos >= rep.bound - 1e-8;
    return rep;
}

} // namespace hgeo
