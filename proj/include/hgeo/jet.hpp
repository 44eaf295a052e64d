#pragma once

#include <array>
#include <cmath>

#include "hgeo/errors.hpp"

namespace hgeo {

/// Univariate truncated Taylor arithmetic: a value together with its first
/// four derivatives with respect to one scalar parameter. Arithmetic on Jet4
/// propagates derivatives exactly (to machine precision), which is how the
/// preset boundary profiles expose omega', ..., omega'''' without finite
/// differences.
struct Jet4 {
    double f = 0.0;  // value
    double d1 = 0.0;
    double d2 = 0.0;
    double d3 = 0.0;
    double d4 = 0.0;

    Jet4() = default;
    explicit Jet4(double value) : f(value) {}
    Jet4(double value, double g1, double g2, double g3, double g4)
        : f(value), d1(g1), d2(g2), d3(g3), d4(g4) {}

    /// The independent variable itself: value v, derivative 1.
    static Jet4 variable(double v) { return Jet4(v, 1.0, 0.0, 0.0, 0.0); }
    static Jet4 constant(double v) { return Jet4(v); }

    double deriv(int order) const {
        switch (order) {
            case 0: return f;
            case 1: return d1;
            case 2: return d2;
            case 3: return d3;
            case 4: return d4;
            default: throw InputError("Jet4::deriv: order out of range");
        }
    }
};

inline Jet4 operator+(const Jet4& a, const Jet4& b) {
    return {a.f + b.f, a.d1 + b.d1, a.d2 + b.d2, a.d3 + b.d3, a.d4 + b.d4};
}
inline Jet4 operator-(const Jet4& a, const Jet4& b) {
    return {a.f - b.f, a.d1 - b.d1, a.d2 - b.d2, a.d3 - b.d3, a.d4 - b.d4};
}
inline Jet4 operator-(const Jet4& a) { return {-a.f, -a.d1, -a.d2, -a.d3, -a.d4}; }

/// Leibniz rule up to order four.
inline Jet4 operator*(const Jet4& a, const Jet4& b) {
    Jet4 r;
    r.f = a.f * b.f;
    r.d1 = a.d1 * b.f + a.f * b.d1;
    r.d2 = a.d2 * b.f + 2.0 * a.d1 * b.d1 + a.f * b.d2;
    r.d3 = a.d3 * b.f + 3.0 * a.d2 * b.d1 + 3.0 * a.d1 * b.d2 + a.f * b.d3;
    r.d4 = a.d4 * b.f + 4.0 * a.d3 * b.d1 + 6.0 * a.d2 * b.d2 + 4.0 * a.d1 * b.d3 +
           a.f * b.d4;
    return r;
}

inline Jet4 operator*(double s, const Jet4& a) {
    return {s * a.f, s * a.d1, s * a.d2, s * a.d3, s * a.d4};
}
inline Jet4 operator*(const Jet4& a, double s) { return s * a; }
inline Jet4 operator+(const Jet4& a, double s) { return {a.f + s, a.d1, a.d2, a.d3, a.d4}; }
inline Jet4 operator+(double s, const Jet4& a) { return a + s; }
inline Jet4 operator-(const Jet4& a, double s) { return a + (-s); }
inline Jet4 operator-(double s, const Jet4& a) { return (-a) + s; }

/// Solve q*b = a for q, order by order.
inline Jet4 operator/(const Jet4& a, const Jet4& b) {
    if (b.f == 0.0) throw Error("Jet4 division by zero value");
    Jet4 q;
    q.f = a.f / b.f;
    q.d1 = (a.d1 - q.f * b.d1) / b.f;
    q.d2 = (a.d2 - q.f * b.d2 - 2.0 * q.d1 * b.d1) / b.f;
    q.d3 = (a.d3 - q.f * b.d3 - 3.0 * q.d1 * b.d2 - 3.0 * q.d2 * b.d1) / b.f;
    q.d4 = (a.d4 - q.f * b.d4 - 4.0 * q.d1 * b.d3 - 6.0 * q.d2 * b.d2 -
            4.0 * q.d3 * b.d1) / b.f;
    return q;
}
inline Jet4 operator/(const Jet4& a, double s) { return (1.0 / s) * a; }
inline Jet4 operator/(double s, const Jet4& a) { return Jet4::constant(s) / a; }

namespace detail {
/// Faa di Bruno composition h(g) from the derivatives h', ..., h'''' of h at g.f.
inline Jet4 compose(const Jet4& g, double h0, double h1, double h2, double h3,
                    double h4) {
    Jet4 r;
    const double g1 = g.d1, g2 = g.d2, g3 = g.d3, g4 = g.d4;
    r.f = h0;
    r.d1 = h1 * g1;
    r.d2 = h2 * g1 * g1 + h1 * g2;
    r.d3 = h3 * g1 * g1 * g1 + 3.0 * h2 * g1 * g2 + h1 * g3;
    r.d4 = h4 * g1 * g1 * g1 * g1 + 6.0 * h3 * g1 * g1 * g2 +
           h2 * (3.0 * g2 * g2 + 4.0 * g1 * g3) + h1 * g4;
    return r;
}
} // namespace detail

inline Jet4 sin(const Jet4& g) {
    const double s = std::sin(g.f), c = std::cos(g.f);
    return detail::compose(g, s, c, -s, -c, s);
}

inline Jet4 cos(const Jet4& g) {
    const double s = std::sin(g.f), c = std::cos(g.f);
    return detail::compose(g, c, -s, -c, s, c);
}

inline Jet4 sqrt(const Jet4& g) {
    if (g.f <= 0.0) throw Error("Jet4 sqrt of non-positive value");
    const double r = std::sqrt(g.f);
    const double h1 = 0.5 / r;
    const double h2 = -0.25 / (g.f * r);
    const double h3 = 0.375 / (g.f * g.f * r);
    const double h4 = -0.9375 / (g.f * g.f * g.f * r);
    return detail::compose(g, r, h1, h2, h3, h4);
}

inline Jet4 exp(const Jet4& g) {
    const double e = std::exp(g.f);
    return detail::compose(g, e, e, e, e, e);
}

} // namespace hgeo
