#pragma once

#include <string>
#include <vector>

#include "hgeo/spheres.hpp"

namespace hgeo {

struct CheckRecord {
    enum class Status { pass, fail, diagnostic };

    std::string id;
    Status status = Status::diagnostic;
    double value = 0.0;     // measured
    double expected = 0.0;  // target or bound
    double tol = 0.0;
    std::string note;
};

/// Outcome of a suite run. Diagnostics never affect the exit status.
class VerificationReport {
public:
    void add_pass_fail(const std::string& id, bool pass, double value, double expected,
                       double tol, const std::string& note = "");
    void add_diagnostic(const std::string& id, double value, double expected,
                        const std::string& note = "");

    const std::vector<CheckRecord>& checks() const { return checks_; }
    int passes() const;
    int failures() const;
    int diagnostics() const;
    int exit_code() const { return failures() > 0 ? 1 : 0; }

    std::string human_text() const;
    /// One record per line:
    /// check id=<id> status=<PASS|FAIL|DIAG> value=<v> expected=<e> tol=<t> note=<...>
    std::string machine_text() const;

private:
    std::vector<CheckRecord> checks_;
};

/// CSV with header "r,x2,k_n,k_R,k_F,gap_err" and one row per sweep entry,
/// 17-significant-digit decimal formatting.
std::string sweep_csv(const SweepTable& table);

std::string format_g17(double v);

} // namespace hgeo
