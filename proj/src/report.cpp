#include "qracah/report.hpp"

#include <chrono>

namespace qracah {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

} // namespace

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skip: return "skip";
        case CheckStatus::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

void Report::append(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool Report::all_passed() const {
    for (const auto& c : checks)
        if (c.status != CheckStatus::Pass) return false;
    return true;
}

std::size_t Report::count(CheckStatus s) const {
    std::size_t n = 0;
    for (const auto& c : checks)
        if (c.status == s) ++n;
    return n;
}

const CheckRecord* Report::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

CheckRecord check_zero(const std::string& name, const std::string& identity,
                       const std::function<Matrix()>& residual) {
    CheckRecord r;
    r.name = name;
    r.identity = identity;
    const auto start = Clock::now();
    Matrix res = residual();
    if (res.is_zero()) {
        r.status = CheckStatus::Pass;
    } else {
        r.status = CheckStatus::Fail;
        r.witness = std::move(res);
        r.note = "nonzero residual";
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

CheckRecord check_equal(const std::string& name, const std::string& identity,
                        const std::function<std::pair<Matrix, Matrix>()>& sides) {
    return check_zero(name, identity, [&]() {
        auto [lhs, rhs] = sides();
        return lhs - rhs;
    });
}

CheckRecord check_true(const std::string& name, const std::string& identity,
                       const std::function<bool()>& pred,
                       const std::string& fail_note) {
    CheckRecord r;
    r.name = name;
    r.identity = identity;
    const auto start = Clock::now();
    if (pred()) {
        r.status = CheckStatus::Pass;
    } else {
        r.status = CheckStatus::Fail;
        r.note = fail_note.empty() ? "predicate failed" : fail_note;
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

CheckRecord skip_record(const std::string& name, const std::string& identity,
                        const std::string& diagnosis) {
    CheckRecord r;
    r.name = name;
    r.identity = identity;
    r.status = CheckStatus::Skip;
    r.note = diagnosis;
    return r;
}

} // namespace qracah
