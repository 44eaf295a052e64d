#include "hgeo/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace hgeo {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void VerificationReport::add_pass_fail(const std::string& id, bool pass, double value,
                                       double expected, double tol,
                                       const std::string& note) {
    CheckRecord rec;
    rec.id = id;
    rec.status = pass ? CheckRecord::Status::pass : CheckRecord::Status::fail;
    rec.value = value;
    rec.expected = expected;
    rec.tol = tol;
    rec.note = note;
    checks_.push_back(std::move(rec));
}

void VerificationReport::add_diagnostic(const std::string& id, double value,
                                        double expected, const std::string& note) {
    CheckRecord rec;
    rec.id = id;
    rec.status = CheckRecord::Status::diagnostic;
    rec.value = value;
    rec.expected = expected;
    rec.note = note;
    checks_.push_back(std::move(rec));
}

int VerificationReport::passes() const {
    return static_cast<int>(std::count_if(checks_.begin(), checks_.end(), [](const auto& c) {
        return c.status == CheckRecord::Status::pass;
    }));
}

int VerificationReport::failures() const {
    return static_cast<int>(std::count_if(checks_.begin(), checks_.end(), [](const auto& c) {
        return c.status == CheckRecord::Status::fail;
    }));
}

int VerificationReport::diagnostics() const {
    return static_cast<int>(std::count_if(checks_.begin(), checks_.end(), [](const auto& c) {
        return c.status == CheckRecord::Status::diagnostic;
    }));
}

namespace {

const char* status_word(CheckRecord::Status s) {
    switch (s) {
        case CheckRecord::Status::pass: return "PASS";
        case CheckRecord::Status::fail: return "FAIL";
        case CheckRecord::Status::diagnostic: return "DIAG";
    }
    return "?";
}

std::string sanitized(const std::string& s) {
    std::string out = s;
    for (char& c : out)
        if (c == '\n' || c == '\r') c = ' ';
    return out;
}

} // namespace

std::string VerificationReport::human_text() const {
    std::ostringstream os;
    for (const CheckRecord& c : checks_) {
        os << "[" << status_word(c.status) << "] " << c.id << ": value=" << format_g17(c.value);
        if (c.status == CheckRecord::Status::diagnostic)
            os << " expected=" << format_g17(c.expected);
        else
            os << " bound=" << format_g17(c.expected) << " tol=" << format_g17(c.tol);
        if (!c.note.empty()) os << "  (" << sanitized(c.note) << ")";
        os << "\n";
    }
    os << "summary: " << passes() << " passed, " << failures() << " failed, "
       << diagnostics() << " diagnostic\n";
    return os.str();
}

std::string VerificationReport::machine_text() const {
    std::ostringstream os;
    for (const CheckRecord& c : checks_) {
        os << "check id=" << c.id << " status=" << status_word(c.status)
           << " value=" << format_g17(c.value) << " expected=" << format_g17(c.expected)
           << " tol=" << format_g17(c.tol) << " note=" << sanitized(c.note) << "\n";
    }
    return os.str();
}

std::string sweep_csv(const SweepTable& table) {
    std::ostringstream os;
    os << "r,x2,k_n,k_R,k_F,gap_err\n";
    for (const SweepRow& row : table.rows) {
        if (!row.ok) continue;
        os << format_g17(row.r) << "," << format_g17(row.x2) << ","
           << format_g17(row.k_n) << "," << format_g17(row.k_r) << ","
           << format_g17(row.k_f) << "," << format_g17(row.gap_err) << "\n";
    }
    return os.str();
}

} // namespace hgeo
