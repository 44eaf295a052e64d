#include "hgeo/spheres.hpp"

#include <algorithm>
#include <cmath>

#include "hgeo/errors.hpp"
#include "hgeo/finsler.hpp"
#include "hgeo/numerics.hpp"

namespace hgeo {

SphereFrame sphere_frame(const ConvexDomain2& dom) {
    SphereFrame fr;
    fr.o = dom.base_point();
    fr.e_par = dom.ref_dir();
    fr.e_perp = rot90(fr.e_par);
    fr.omega_p = dom.omega(0.0);
    fr.omega_a = dom.omega(kPi);
    return fr;
}

Jet4 sphere_radial_jet(const ConvexDomain2& dom, double r, double phi) {
    if (!(r > 0.0)) throw InputError("sphere radius must be > 0");
    const Jet4 a = dom.omega_jet(phi);
    const Jet4 b = dom.omega_jet(phi + kPi);
    const double e2r = std::exp(2.0 * r);
    return a * b * (e2r - 1.0) / (a + b * e2r);
}

double sphere_radial(const ConvexDomain2& dom, double r, double phi) {
    if (!(r > 0.0)) throw InputError("sphere radius must be > 0");
    const double a = dom.omega(phi);
    const double b = dom.omega(phi + kPi);
    const double e2r = std::exp(2.0 * r);
    return a * b * (e2r - 1.0) / (a + b * e2r);
}

CurveJet circle_jet(const ConvexDomain2& dom, double r, double phi) {
    const Jet4 rho = sphere_radial_jet(dom, r, phi);
    const Vec2 d = dom.direction(phi);
    const Vec2 dp = rot90(d);
    CurveJet jet;
    jet.c = dom.base_point() + rho.f * d;
    jet.c1 = rho.d1 * d + rho.f * dp;
    jet.c2 = (rho.d2 - rho.f) * d + 2.0 * rho.d1 * dp;
    jet.tag = CurveJet::Param::arbitrary;
    return jet;
}

SweepTable curvature_sweep(const ConvexDomain2& dom, const std::vector<double>& r_grid,
                           double phi) {
    if (r_grid.empty()) throw InputError("curvature_sweep: empty radius grid");
    SweepTable table;
    table.phi = phi;
    table.rows.reserve(r_grid.size());
    double prev = 0.0;
    for (double r : r_grid) {
        if (!(r > prev)) throw InputError("curvature_sweep: radii must increase");
        prev = r;
        SweepRow row;
        row.r = r;
        try {
            const double a = dom.omega(phi);
            const double b = dom.omega(phi + kPi);
            const double rho = sphere_radial(dom, r, phi);
            row.x2 = a - rho;
            row.gap_err = std::abs(row.x2 * std::exp(2.0 * r) - a * (a / b + 1.0));

            const CurveJet jet = circle_jet(dom, r, phi);
            row.k_r = rund_curvature(dom, jet);
            row.k_f = finsler_curvature(dom, jet);
            const NormalVector n =
                unit_normal(dom, jet.c, jet.c1, std::optional<Vec2>(dom.base_point()));
            row.k_n = normal_curvature(dom, jet, n).value;
            if (!std::isfinite(row.k_n) || !std::isfinite(row.k_r) ||
                !std::isfinite(row.k_f))
                throw SolverError("non-finite curvature");
            row.ok = true;
        } catch (const Error& e) {
            row.ok = false;
            row.note = e.what();
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

double sweep_value(const SweepRow& row, SweepColumn column) {
    switch (column) {
        case SweepColumn::normal: return row.k_n;
        case SweepColumn::rund: return row.k_r;
        case SweepColumn::finsler: return row.k_f;
        case SweepColumn::rund_sq: return row.k_r * row.k_r;
        case SweepColumn::finsler_sq: return row.k_f * row.k_f;
    }
    throw InputError("unknown sweep column");
}

std::string column_name(SweepColumn column) {
    switch (column) {
        case SweepColumn::normal: return "k_n";
        case SweepColumn::rund: return "k_R";
        case SweepColumn::finsler: return "k_F";
        case SweepColumn::rund_sq: return "k_R^2";
        case SweepColumn::finsler_sq: return "k_F^2";
    }
    return "?";
}

AsymptoticFit fit_exponential_approach(const SweepTable& table, SweepColumn column,
                                       double r_lo, double r_hi, double limit) {
    std::vector<double> rs, logs;
    double sign = 0.0;
    for (const SweepRow& row : table.rows) {
        if (!row.ok || row.r < r_lo - 1e-12 || row.r > r_hi + 1e-12) continue;
        const double dev = sweep_value(row, column) - limit;
        if (std::abs(dev) < 1e-10) continue;  // at the noise floor
        if (sign == 0.0) sign = dev > 0.0 ? 1.0 : -1.0;
        if (dev * sign < 0.0)
            throw SolverError("fit_exponential_approach: deviation changes sign");
        rs.push_back(row.r);
        logs.push_back(std::log(std::abs(dev)));
    }
    if (rs.size() < 4)
        throw SolverError("fit_exponential_approach: fewer than 4 usable rows");

    const double n = static_cast<double>(rs.size());
    double sr = 0.0, sl = 0.0, srr = 0.0, srl = 0.0;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        sr += rs[i];
        sl += logs[i];
        srr += rs[i] * rs[i];
        srl += rs[i] * logs[i];
    }
    const double slope = (n * srl - sr * sl) / (n * srr - sr * sr);
    const double intercept = (sl - slope * sr) / n;

    AsymptoticFit fit;
    fit.limit = limit;
    fit.rate = -slope;
    fit.coeff = sign * std::exp(intercept);
    fit.r_lo = rs.front();
    fit.r_hi = rs.back();
    fit.points = static_cast<int>(rs.size());
    double ss = 0.0;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        const double resid = logs[i] - (intercept + slope * rs[i]);
        ss += resid * resid;
    }
    fit.rms_log_residual = std::sqrt(ss / n);
    return fit;
}

namespace {

struct PFrame {
    Vec2 p;        // boundary point at phi = 0
    Vec2 tangent;  // unit boundary tangent there (counterclockwise)
    Vec2 n_in;     // unit inward normal
    BoundaryJet jet;
    double chord_h;  // omega(0) + omega(pi): the axis chord through p
};

PFrame p_frame(const ConvexDomain2& dom) {
    PFrame fr;
    fr.p = dom.boundary_point(0.0);
    fr.jet = dom.graph_jet(0.0);
    fr.tangent = dom.boundary_tangent(0.0);
    fr.n_in = rot90(fr.tangent);
    fr.chord_h = dom.omega(0.0) + dom.omega(kPi);
    return fr;
}

void require_normalized(const PFrame& fr) {
    if (std::abs(fr.jet.f2 - 0.5) > 1e-6)
        throw InputError("domain is not normalized: f''(0) = " +
                         std::to_string(fr.jet.f2));
}

} // namespace

Predictions predicted_coefficients(const ConvexDomain2& dom) {
    const PFrame fr = p_frame(dom);
    require_normalized(fr);

    Predictions p;
    const double omega_a = dom.omega(kPi);
    p.c = (1.0 + omega_a) / omega_a;
    p.chord_h = fr.chord_h;
    p.f3 = fr.jet.f3;
    p.f4 = fr.jet.f4;

    const Vec2 chord_dir = -(p.f3 * fr.tangent - 0.5 * fr.n_in);  // into the domain
    p.l_chord = dom.chord_through_boundary(fr.p, chord_dir);

    const double f3sq = p.f3 * p.f3;
    p.a_normal = p.c * (1.0 / p.chord_h - 8.0 * f3sq / 9.0);
    p.a_rund_sq = p.c * (2.0 / p.l_chord - 8.0 * f3sq / 9.0);
    p.a_finsler_sq = p.c * (-8.0 * f3sq / 9.0 + 4.0 * p.f4);
    return p;
}

const std::vector<std::string>& expansion_check_ids() {
    static const std::vector<std::string> ids = {
        "T_LEAD", "T_X2COEF", "F_LEAD", "F_SQRT_COEF", "THRAZN", "G11_LEAD",
        "G12_LEAD", "G22_LEAD", "F2_EXACT", "GARB_EXACT", "FL_LEAD"};
    return ids;
}

ExpansionReport expansion_check(const ConvexDomain2& dom, const std::string& check_id,
                                const std::vector<double>& x2_sequence) {
    const PFrame fr = p_frame(dom);
    require_normalized(fr);
    if (x2_sequence.empty()) throw InputError("expansion_check: empty x2 sequence");
    for (double v : x2_sequence)
        if (!(v > 0.0) || !(v < 0.9 * dom.omega(0.0)))
            throw InputError("expansion_check: x2 outside the safe range");

    ExpansionReport rep;
    rep.id = check_id;
    rep.x2 = x2_sequence;
    const double f3 = fr.jet.f3;

    auto point_at = [&](double x2) { return Vec2(fr.p + x2 * fr.n_in); };
    auto tensor_frame = [&](double x2, const Vec2& ref) {
        const SymMatrix2 g = fundamental_tensor(dom, point_at(x2), ref);
        SymMatrix2 out;
        out.g11 = g.quad(fr.tangent, fr.tangent);
        out.g12 = g.quad(fr.tangent, fr.n_in);
        out.g22 = g.quad(fr.n_in, fr.n_in);
        return out;
    };

    std::function<double(double)> measure;
    if (check_id == "T_LEAD") {
        rep.target = 1.0;
        measure = [&](double x2) {
            return dom.ray_exit(point_at(x2), fr.tangent).t / (2.0 * std::sqrt(x2));
        };
    } else if (check_id == "T_X2COEF") {
        rep.target = -4.0 * f3 / 3.0;
        measure = [&](double x2) {
            const double t = dom.ray_exit(point_at(x2), fr.tangent).t;
            return (t - 2.0 * std::sqrt(x2)) / x2;
        };
    } else if (check_id == "F_LEAD") {
        rep.target = 1.0;
        measure = [&](double x2) {
            return 2.0 * std::sqrt(x2) * hilbert_norm(dom, point_at(x2), fr.tangent);
        };
    } else if (check_id == "F_SQRT_COEF") {
        rep.target = 2.0 * f3 * f3 / 9.0;
        rep.note = "diagnostic: series coefficient as printed, not asserted";
        measure = [&](double x2) {
            const double f = hilbert_norm(dom, point_at(x2), fr.tangent);
            return (f - 0.5 / std::sqrt(x2)) / std::sqrt(x2);
        };
    } else if (check_id == "THRAZN") {
        rep.target = 2.0 * f3 / 3.0;
        measure = [&](double x2) {
            const Vec2 x = point_at(x2);
            return funk(dom, x, fr.tangent) - funk(dom, x, Vec2(-fr.tangent));
        };
    } else if (check_id == "G11_LEAD") {
        rep.target = 1.0;
        measure = [&](double x2) { return 4.0 * x2 * tensor_frame(x2, fr.tangent).g11; };
    } else if (check_id == "G12_LEAD") {
        rep.target = 1.0;
        if (std::abs(f3) < 1e-6) {
            rep.applicable = false;
            rep.note = "f3 vanishes at p; scaled g12 limit undefined";
            return rep;
        }
        measure = [&](double x2) {
            return 6.0 * x2 * tensor_frame(x2, fr.tangent).g12 / f3;
        };
    } else if (check_id == "G22_LEAD") {
        rep.target = 1.0;
        measure = [&](double x2) {
            return 4.0 * x2 * x2 * tensor_frame(x2, fr.tangent).g22;
        };
    } else if (check_id == "F2_EXACT") {
        rep.target = 0.0;
        rep.exact = true;
        measure = [&](double x2) {
            const double f = hilbert_norm(dom, point_at(x2), fr.n_in);
            return std::abs(f - 0.5 * (1.0 / (fr.chord_h - x2) + 1.0 / x2));
        };
    } else if (check_id == "GARB_EXACT") {
        rep.target = 0.0;
        rep.exact = true;
        measure = [&](double x2) {
            const double g22 = tensor_frame(x2, fr.n_in).g22;
            const double rhs = 0.25 * std::pow(1.0 / (fr.chord_h - x2) + 1.0 / x2, 2);
            return std::abs(g22 - rhs);
        };
    } else if (check_id == "FL_LEAD") {
        rep.target = 1.0;
        measure = [&](double x2) {
            const Vec2 dir = -f3 * fr.tangent + 0.5 * fr.n_in;
            return 4.0 * x2 * hilbert_norm(dom, point_at(x2), dir);
        };
    } else {
        throw InputError("unknown expansion check id: " + check_id);
    }

    rep.measured.reserve(x2_sequence.size());
    for (double x2 : x2_sequence) rep.measured.push_back(measure(x2));

    if (rep.exact) {
        rep.extrapolated = *std::max_element(rep.measured.begin(), rep.measured.end());
    } else if (rep.measured.size() >= 3) {
        const std::size_t n = rep.measured.size();
        const double ratio = rep.x2[n - 2] / rep.x2[n - 1];
        const auto ex = extrapolate_limit(rep.measured[n - 3], rep.measured[n - 2],
                                          rep.measured[n - 1], ratio);
        rep.extrapolated = ex.limit;
        rep.order = ex.order;
    } else {
        rep.extrapolated = rep.measured.back();
    }
    return rep;
}

} // namespace hgeo
