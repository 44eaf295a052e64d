#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgeo/convex_domain.hpp"
#include "hgeo/report.hpp"
#include "hgeo/spheres.hpp"

namespace hgeo {

struct SuiteOptions {
    std::uint64_t seed = 42;
    double r_min = 1.0;
    double r_max = 5.0;
    int steps = 17;
    double phi = 0.0;
    /// Check groups to run; an empty selection produces an empty report.
    std::vector<std::string> groups;

    /// geometry, metric, connection, normalization, spheres, expansion,
    /// diagnostic.
    static const std::vector<std::string>& known_groups();
};

struct SuiteResult {
    VerificationReport report;
    std::optional<SweepTable> sweep;  // main-angle sweep when spheres ran
};

/// Run the selected invariant suites on a working domain (based at o with
/// phi = 0 toward the distinguished boundary point). Per-check errors are
/// recorded as failures, not thrown.
SuiteResult run_suite(const ConvexDomain2& dom, const SuiteOptions& options);

} // namespace hgeo
