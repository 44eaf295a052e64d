#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hgeo/config.hpp"
#include "hgeo/connection.hpp"
#include "hgeo/errors.hpp"
#include "hgeo/finsler.hpp"
#include "hgeo/normalization.hpp"
#include "hgeo/report.hpp"
#include "hgeo/verify.hpp"

namespace {

using namespace hgeo;

constexpr int kExitOk = 0;
constexpr int kExitChecksFailed = 1;
constexpr int kExitBadInput = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open output file: " + path);
    out << body;
}

DomainConfig load_config(const std::string& path) {
    const ParseOutcome parsed = parse_domain_config(read_file(path));
    if (!parsed.ok()) {
        for (const std::string& err : parsed.errors) std::cerr << path << ": " << err << "\n";
        throw InputError("config rejected");
    }
    return *parsed.config;
}

Vec2 parse_point(const std::string& spec) {
    Vec2 v;
    const auto comma = spec.find(',');
    if (comma == std::string::npos)
        throw InputError("expected x,y but got '" + spec + "'");
    try {
        v.x() = std::stod(spec.substr(0, comma));
        v.y() = std::stod(spec.substr(comma + 1));
    } catch (...) {
        throw InputError("expected x,y but got '" + spec + "'");
    }
    return v;
}

int cmd_check(const std::string& config_path) {
    const DomainConfig cfg = load_config(config_path);
    const ConvexDomain2 dom = build_domain(cfg);
    std::cout << "kind: " << cfg.kind << " (" << dom.tag() << ")\n"
              << "base point: " << format_g17(dom.base_point().x()) << ", "
              << format_g17(dom.base_point().y()) << "\n"
              << "omega range: [" << format_g17(dom.omega_min()) << ", "
              << format_g17(dom.omega_max()) << "]\n"
              << "diameter: " << format_g17(dom.diameter()) << "\n"
              << "convexity: ok\n";
    return kExitOk;
}

int cmd_dist(const std::string& config_path, const std::string& a_spec,
             const std::string& b_spec, bool with_oracle) {
    const ConvexDomain2 dom = build_domain(load_config(config_path));
    const Vec2 a = parse_point(a_spec), b = parse_point(b_spec);
    const double d = hilbert_distance(dom, a, b);
    std::cout << "distance " << format_g17(d) << "\n";
    if (with_oracle) {
        const double q = distance_by_quadrature(dom, a, b);
        std::cout << "quadrature " << format_g17(q) << "\n"
                  << "difference " << format_g17(d - q) << "\n";
    }
    return kExitOk;
}

int cmd_tensor(const std::string& config_path, const std::string& x_spec,
               const std::string& y_spec) {
    const ConvexDomain2 dom = build_domain(load_config(config_path));
    const Vec2 x = parse_point(x_spec), y = parse_point(y_spec);
    const SymMatrix2 g = fundamental_tensor(dom, x, y);
    const SymMatrix2 fd = fundamental_tensor_fd(dom, x, y);
    std::cout << "g11 " << format_g17(g.g11) << "  fd " << format_g17(fd.g11) << "\n"
              << "g12 " << format_g17(g.g12) << "  fd " << format_g17(fd.g12) << "\n"
              << "g22 " << format_g17(g.g22) << "  fd " << format_g17(fd.g22) << "\n"
              << "F   " << format_g17(hilbert_norm(dom, x, y)) << "\n";
    return kExitOk;
}

int cmd_sweep(const std::string& config_path, double r_min, double r_max, int steps,
              double phi, const std::string& out_path) {
    const ConvexDomain2 dom = build_domain(load_config(config_path));
    std::vector<double> grid(steps);
    for (int i = 0; i < steps; ++i)
        grid[i] = steps == 1 ? r_max : r_min + (r_max - r_min) * i / (steps - 1);
    const SweepTable table = curvature_sweep(dom, grid, phi);
    const std::string csv = sweep_csv(table);
    if (out_path.empty()) std::cout << csv;
    else write_file(out_path, csv);

    for (SweepColumn col :
         {SweepColumn::normal, SweepColumn::rund, SweepColumn::finsler}) {
        try {
            const AsymptoticFit fit =
                fit_exponential_approach(table, col, std::max(2.0, r_min), r_max);
            std::cout << "fit " << column_name(col) << ": limit=1 coeff="
                      << format_g17(fit.coeff) << " rate=" << format_g17(fit.rate)
                      << " rms_log=" << format_g17(fit.rms_log_residual) << " points="
                      << fit.points << "\n";
        } catch (const Error& e) {
            std::cout << "fit " << column_name(col) << ": " << e.what() << "\n";
        }
    }
    return kExitOk;
}

int cmd_normalize(const std::string& config_path, const std::string& out_path) {
    const ConvexDomain2 dom = build_domain(load_config(config_path));
    const NormalizationResult res = normalize(dom, dom.base_point(), 0.0);
    const NormalizationReport& r = res.report;
    std::ostringstream os;
    os << "alpha " << format_g17(r.alpha) << "\n"
       << "tan_beta " << format_g17(r.tan_beta) << "\n"
       << "tan_beta_bound " << format_g17(r.tan_beta_bound) << "\n"
       << "omega_u " << format_g17(r.omega_u) << "\n"
       << "H " << format_g17(r.chord_h) << "\n"
       << "kbar0 " << format_g17(r.kbar0) << "\n"
       << "f2 " << format_g17(r.f2_normalized) << "\n"
       << "f3 " << format_g17(r.f3_normalized) << "\n"
       << "f4 " << format_g17(r.f4_normalized) << "\n"
       << "curvature_max " << format_g17(r.curvature_max) << "\n"
       << "curvature_min " << format_g17(r.curvature_min) << "\n"
       << "omega_hat0 " << format_g17(r.omega_hat0) << "\n"
       << "p_image_residual " << format_g17(r.p_image_residual) << "\n"
       << "tangent_slope " << format_g17(r.tangent_slope) << "\n"
       << "o_image " << format_g17(r.o_image.x()) << "," << format_g17(r.o_image.y())
       << "\n";
    if (out_path.empty()) std::cout << os.str();
    else write_file(out_path, os.str());
    return kExitOk;
}

int cmd_verify(const std::string& config_path, const std::string& checks, double r_min,
               double r_max, int steps, double phi, std::uint64_t seed,
               const std::string& out_path, const std::string& machine_path,
               const std::string& csv_path) {
    const ConvexDomain2 dom = build_domain(load_config(config_path));

    SuiteOptions opt;
    opt.seed = seed;
    opt.r_min = r_min;
    opt.r_max = r_max;
    opt.steps = steps;
    opt.phi = phi;
    if (checks == "all") {
        opt.groups = SuiteOptions::known_groups();
    } else if (!checks.empty()) {
        std::istringstream ss(checks);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) opt.groups.push_back(item);
    }

    const SuiteResult result = run_suite(dom, opt);
    const std::string human = result.report.human_text();
    if (out_path.empty()) std::cout << human;
    else write_file(out_path, human);
    if (!machine_path.empty()) write_file(machine_path, result.report.machine_text());
    if (!csv_path.empty() && result.sweep) write_file(csv_path, sweep_csv(*result.sweep));
    return result.report.exit_code();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical toolkit for planar Hilbert geometries"};
    app.require_subcommand(1);

    std::string config_path, a_spec, b_spec, x_spec, y_spec;
    std::string out_path, machine_path, csv_path;
    std::string checks = "all";
    double r_min = 1.0, r_max = 5.0, phi = 0.0;
    int steps = 17;
    std::uint64_t seed = 42;
    bool with_oracle = false;

    auto* check = app.add_subcommand("check", "Parse and validate a domain config");
    check->add_option("config", config_path, "config file")->required();

    auto* dist = app.add_subcommand("dist", "Hilbert distance between two points");
    dist->add_option("config", config_path)->required();
    dist->add_option("--a", a_spec, "first point x,y")->required();
    dist->add_option("--b", b_spec, "second point x,y")->required();
    dist->add_flag("--quadrature", with_oracle, "also run the quadrature oracle");

    auto* tensor = app.add_subcommand("tensor", "Fundamental tensor at (x, y)");
    tensor->add_option("config", config_path)->required();
    tensor->add_option("--x", x_spec, "base point x,y")->required();
    tensor->add_option("--y", y_spec, "direction x,y")->required();

    auto* sweep = app.add_subcommand("sweep", "Curvatures of circles over a radius grid");
    sweep->add_option("config", config_path)->required();
    sweep->add_option("--r-min", r_min, "smallest radius");
    sweep->add_option("--r-max", r_max, "largest radius");
    sweep->add_option("--steps", steps, "grid size");
    sweep->add_option("--phi", phi, "circle angle");
    sweep->add_option("--out", out_path, "CSV output path (stdout if omitted)");

    auto* norm = app.add_subcommand("normalize", "Projective normalization report");
    norm->add_option("config", config_path)->required();
    norm->add_option("--out", out_path, "report output path (stdout if omitted)");

    auto* verify = app.add_subcommand("verify", "Run the verification suite");
    verify->add_option("config", config_path)->required();
    verify->add_option("--checks", checks,
                       "comma-separated groups (default all; empty string = none)");
    verify->add_option("--r-min", r_min);
    verify->add_option("--r-max", r_max);
    verify->add_option("--steps", steps);
    verify->add_option("--phi", phi);
    verify->add_option("--seed", seed, "seed for the sampled checks");
    verify->add_option("--out", out_path, "human-readable report path");
    verify->add_option("--machine", machine_path, "machine-readable report path");
    verify->add_option("--csv", csv_path, "sweep CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (check->parsed()) return cmd_check(config_path);
        if (dist->parsed()) return cmd_dist(config_path, a_spec, b_spec, with_oracle);
        if (tensor->parsed()) return cmd_tensor(config_path, x_spec, y_spec);
        if (sweep->parsed())
            return cmd_sweep(config_path, r_min, r_max, steps, phi, out_path);
        if (norm->parsed()) return cmd_normalize(config_path, out_path);
        if (verify->parsed())
            return cmd_verify(config_path, checks, r_min, r_max, steps, phi, seed,
                              out_path, machine_path, csv_path);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitChecksFailed;
    }
    return kExitBadInput;
}
