#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qracah/matrix.hpp"

namespace qracah {

enum class CheckStatus { Pass, Fail, Skip, Inconclusive };

const char* to_string(CheckStatus s);

// One verified identity. `name` is a stable machine id ("relations.serre"),
// `identity` spells out the algebraic statement that was tested, `witness`
// holds the residual matrix on failure, `note` carries diagnoses or
// certificates, and `elapsed_ms` is wall time for this check.
struct CheckRecord {
    std::string name;
    std::string identity;
    CheckStatus status = CheckStatus::Pass;
    std::optional<Matrix> witness;
    std::string note;
    double elapsed_ms = 0.0;

    bool passed() const { return status == CheckStatus::Pass; }
};

struct Report {
    std::vector<CheckRecord> checks;

    void add(CheckRecord r) { checks.push_back(std::move(r)); }
    void append(const Report& other);

    bool all_passed() const;
    std::size_t count(CheckStatus s) const;
    const CheckRecord* find(const std::string& name) const;
};

// Timed helpers. The callable computes the residual / the two sides / the
// predicate; wall time is measured around it.
CheckRecord check_zero(const std::string& name, const std::string& identity,
                       const std::function<Matrix()>& residual);

CheckRecord check_equal(const std::string& name, const std::string& identity,
                        const std::function<std::pair<Matrix, Matrix>()>& sides);

CheckRecord check_true(const std::string& name, const std::string& identity,
                       const std::function<bool()>& pred,
                       const std::string& fail_note = "");

CheckRecord skip_record(const std::string& name, const std::string& identity,
                        const std::string& diagnosis);

} // namespace qracah
