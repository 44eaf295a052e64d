#include "hgeo/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "hgeo/convex_body.hpp"
#include "hgeo/errors.hpp"

namespace hgeo {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

bool parse_double(const std::string& s, double& out) {
    const char* begin = s.data();
    const char* end = begin + s.size();
    const auto res = std::from_chars(begin, end, out);
    return res.ec == std::errc{} && res.ptr == end;
}

struct RawEntry {
    std::vector<double> values;
    int line;
};

struct RawConfig {
    std::string kind;
    int kind_line = 0;
    std::map<std::string, RawEntry> entries;
    std::set<std::string> invalid;  // keys whose values already failed to parse
};

} // namespace

ParseOutcome parse_domain_config(const std::string& text) {
    ParseOutcome out;
    RawConfig raw;

    std::istringstream stream(text);
    std::string line;
    int lineno = 0;
    while (std::getline(stream, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);

        std::istringstream tokens(line);
        std::string token;
        while (tokens >> token) {
            const auto eq = token.find('=');
            if (eq == std::string::npos || eq == 0) {
                out.errors.push_back("line " + std::to_string(lineno) +
                                     ": expected key=value, got '" + token + "'");
                continue;
            }
            const std::string key = token.substr(0, eq);
            const std::string value = token.substr(eq + 1);
            if (key == "kind") {
                if (!raw.kind.empty()) {
                    out.errors.push_back("line " + std::to_string(lineno) +
                                         ": repeated key 'kind'");
                    continue;
                }
                raw.kind = value;
                raw.kind_line = lineno;
                continue;
            }
            if (raw.entries.count(key)) {
                out.errors.push_back("line " + std::to_string(lineno) +
                                     ": repeated key '" + key + "'");
                continue;
            }
            RawEntry entry;
            entry.line = lineno;
            std::istringstream vals(value);
            std::string item;
            bool bad = false;
            while (std::getline(vals, item, ',')) {
                double v;
                if (!parse_double(item, v)) {
                    out.errors.push_back("line " + std::to_string(lineno) + ": key '" +
                                         key + "' has non-numeric value '" + item + "'");
                    bad = true;
                    break;
                }
                entry.values.push_back(v);
            }
            if (!bad && entry.values.empty()) {
                out.errors.push_back("line " + std::to_string(lineno) + ": key '" + key +
                                     "' has no value");
                bad = true;
            }
            if (bad) raw.invalid.insert(key);
            else raw.entries.emplace(key, std::move(entry));
        }
    }

    if (raw.kind.empty()) {
        out.errors.push_back("line 0: missing required key 'kind'");
        return out;
    }

    static const std::set<std::string> kinds = {"disk", "ellipse", "radial_fourier",
                                                "ball3", "ellipsoid3"};
    if (!kinds.count(raw.kind)) {
        out.errors.push_back("line " + std::to_string(raw.kind_line) +
                             ": unknown kind '" + raw.kind + "'");
        return out;
    }

    DomainConfig cfg;
    cfg.kind = raw.kind;
    std::set<std::string> consumed;

    auto take = [&](const std::string& key, std::size_t arity,
                    bool required) -> const RawEntry* {
        const auto it = raw.entries.find(key);
        if (it == raw.entries.end()) {
            if (required && !raw.invalid.count(key))
                out.errors.push_back("line 0: missing required key '" + key + "' for kind " +
                                     cfg.kind);
            return nullptr;
        }
        consumed.insert(key);
        if (it->second.values.size() != arity) {
            out.errors.push_back("line " + std::to_string(it->second.line) + ": key '" +
                                 key + "' expects " + std::to_string(arity) +
                                 " value(s), got " +
                                 std::to_string(it->second.values.size()));
            return nullptr;
        }
        return &it->second;
    };

    auto vec2_of = [](const RawEntry* e) { return Vec2(e->values[0], e->values[1]); };
    auto vec3_of = [](const RawEntry* e) {
        return Vec3(e->values[0], e->values[1], e->values[2]);
    };

    if (cfg.kind == "disk") {
        if (const auto* e = take("radius", 1, true)) cfg.radius = e->values[0];
        if (const auto* e = take("center", 2, true)) cfg.center2 = vec2_of(e);
        if (const auto* e = take("o", 2, true)) cfg.o2 = vec2_of(e);
    } else if (cfg.kind == "ellipse") {
        if (const auto* e = take("semi_axes", 2, true)) cfg.semi_axes2 = vec2_of(e);
        if (const auto* e = take("center", 2, true)) cfg.center2 = vec2_of(e);
        if (const auto* e = take("o", 2, true)) cfg.o2 = vec2_of(e);
    } else if (cfg.kind == "radial_fourier") {
        if (const auto* e = take("a0", 1, true)) cfg.a0 = e->values[0];
        if (const auto* e = take("center", 2, false)) cfg.center2 = vec2_of(e);
        if (const auto* e = take("o", 2, true)) cfg.o2 = vec2_of(e);
        // cosK / sinK harmonics, K >= 1.
        for (const auto& [key, entry] : raw.entries) {
            const bool is_cos = key.rfind("cos", 0) == 0;
            const bool is_sin = key.rfind("sin", 0) == 0;
            if (!is_cos && !is_sin) continue;
            int k = 0;
            const std::string idx = key.substr(3);
            if (!idx.empty()) {
                try { k = std::stoi(idx); } catch (...) { k = 0; }
            }
            if (k < 1) {
                out.errors.push_back("line " + std::to_string(entry.line) +
                                     ": bad harmonic key '" + key + "'");
                continue;
            }
            if (entry.values.size() != 1) {
                out.errors.push_back("line " + std::to_string(entry.line) + ": key '" +
                                     key + "' expects 1 value");
                continue;
            }
            auto& coeffs = is_cos ? cfg.cos_coeffs : cfg.sin_coeffs;
            if (coeffs.size() < static_cast<std::size_t>(k)) coeffs.resize(k, 0.0);
            coeffs[k - 1] = entry.values[0];
            consumed.insert(key);
        }
    } else if (cfg.kind == "ball3") {
        if (const auto* e = take("radius", 1, true)) cfg.radius = e->values[0];
        if (const auto* e = take("center", 3, true)) cfg.center3 = vec3_of(e);
        if (const auto* e = take("o", 3, true)) cfg.o3 = vec3_of(e);
        if (const auto* e = take("span_u", 3, false)) cfg.span_u = vec3_of(e);
        if (const auto* e = take("span_v", 3, false)) cfg.span_v = vec3_of(e);
    } else if (cfg.kind == "ellipsoid3") {
        if (const auto* e = take("semi_axes", 3, true)) cfg.semi_axes3 = vec3_of(e);
        if (const auto* e = take("center", 3, true)) cfg.center3 = vec3_of(e);
        if (const auto* e = take("o", 3, true)) cfg.o3 = vec3_of(e);
        if (const auto* e = take("span_u", 3, false)) cfg.span_u = vec3_of(e);
        if (const auto* e = take("span_v", 3, false)) cfg.span_v = vec3_of(e);
    }

    if (const auto* e = take("phi_p", 1, false)) cfg.phi_p = e->values[0];

    for (const auto& [key, entry] : raw.entries)
        if (!consumed.count(key))
            out.errors.push_back("line " + std::to_string(entry.line) +
                                 ": unknown key '" + key + "' for kind " + cfg.kind);

    if (out.errors.empty()) out.config = cfg;
    return out;
}

std::string render_domain_config(const DomainConfig& cfg) {
    std::ostringstream os;
    os << "kind=" << cfg.kind << "\n";
    if (cfg.kind == "disk") {
        os << "radius=" << fmt(cfg.radius) << "\n";
        os << "center=" << fmt(cfg.center2.x()) << "," << fmt(cfg.center2.y()) << "\n";
        os << "o=" << fmt(cfg.o2.x()) << "," << fmt(cfg.o2.y()) << "\n";
    } else if (cfg.kind == "ellipse") {
        os << "semi_axes=" << fmt(cfg.semi_axes2.x()) << "," << fmt(cfg.semi_axes2.y())
           << "\n";
        os << "center=" << fmt(cfg.center2.x()) << "," << fmt(cfg.center2.y()) << "\n";
        os << "o=" << fmt(cfg.o2.x()) << "," << fmt(cfg.o2.y()) << "\n";
    } else if (cfg.kind == "radial_fourier") {
        os << "a0=" << fmt(cfg.a0) << "\n";
        for (std::size_t k = 0; k < cfg.cos_coeffs.size(); ++k)
            if (cfg.cos_coeffs[k] != 0.0)
                os << "cos" << (k + 1) << "=" << fmt(cfg.cos_coeffs[k]) << "\n";
        for (std::size_t k = 0; k < cfg.sin_coeffs.size(); ++k)
            if (cfg.sin_coeffs[k] != 0.0)
                os << "sin" << (k + 1) << "=" << fmt(cfg.sin_coeffs[k]) << "\n";
        os << "center=" << fmt(cfg.center2.x()) << "," << fmt(cfg.center2.y()) << "\n";
        os << "o=" << fmt(cfg.o2.x()) << "," << fmt(cfg.o2.y()) << "\n";
    } else {
        if (cfg.kind == "ball3") os << "radius=" << fmt(cfg.radius) << "\n";
        else
            os << "semi_axes=" << fmt(cfg.semi_axes3.x()) << ","
               << fmt(cfg.semi_axes3.y()) << "," << fmt(cfg.semi_axes3.z()) << "\n";
        os << "center=" << fmt(cfg.center3.x()) << "," << fmt(cfg.center3.y()) << ","
           << fmt(cfg.center3.z()) << "\n";
        os << "o=" << fmt(cfg.o3.x()) << "," << fmt(cfg.o3.y()) << "," << fmt(cfg.o3.z())
           << "\n";
        os << "span_u=" << fmt(cfg.span_u.x()) << "," << fmt(cfg.span_u.y()) << ","
           << fmt(cfg.span_u.z()) << "\n";
        os << "span_v=" << fmt(cfg.span_v.x()) << "," << fmt(cfg.span_v.y()) << ","
           << fmt(cfg.span_v.z()) << "\n";
    }
    os << "phi_p=" << fmt(cfg.phi_p) << "\n";
    return os.str();
}

ConvexDomain2 build_domain(const DomainConfig& cfg) {
    const Vec2 ref(std::cos(cfg.phi_p), std::sin(cfg.phi_p));
    if (cfg.kind == "disk")
        return ConvexDomain2::disk(cfg.center2, cfg.radius, cfg.o2, ref);
    if (cfg.kind == "ellipse")
        return ConvexDomain2::ellipse(cfg.center2, cfg.semi_axes2.x(),
                                      cfg.semi_axes2.y(), cfg.o2, ref);
    if (cfg.kind == "radial_fourier")
        return ConvexDomain2::radial_fourier(cfg.a0, cfg.cos_coeffs, cfg.sin_coeffs,
                                             cfg.center2, cfg.o2, ref);
    if (cfg.kind == "ball3" || cfg.kind == "ellipsoid3") {
        const ConvexBody3 body = cfg.kind == "ball3"
                                     ? ConvexBody3::ball(cfg.center3, cfg.radius)
                                     : ConvexBody3::ellipsoid(cfg.center3, cfg.semi_axes3);
        const ConvexDomain2 section =
            planar_section(body, cfg.o3, cfg.span_u, cfg.span_v, cfg.kind + "_section");
        return section.rebased(Vec2::Zero(), ref);
    }
    throw InputError("build_domain: unknown kind " + cfg.kind);
}

} // namespace hgeo
