#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "qracah/psi.hpp"

namespace qracah {

using Json = nlohmann::ordered_json;

// Verification suites, in dependency order. Later suites reuse artifacts of
// earlier ones; requesting any subset runs only that subset.
enum class Suite { Relations, Equitable, Loperator, Tdpair, Psi, Proof };

const std::vector<Suite>& all_suites();
const char* to_string(Suite s);
std::optional<Suite> suite_from_string(const std::string& s);

struct SweepSpec {
    long count = 0;
    std::uint64_t seed = 0;
};

struct RunConfig {
    ParamSet params;
    std::vector<Suite> suites;  // deduped, dependency order
    std::optional<SweepSpec> sweep;
    int max_dim = 18;
};

// Parses and validates a JSON config document. Rationals are strings "p" or
// "p/q" (exact JSON integers also accepted); floats and unknown keys are
// rejected. Throws ConfigError with a message naming every problem found.
RunConfig parse_config(const Json& doc);

// Machine-readable description of the accepted config document.
Json config_schema();

// Exit codes shared by the library driver and the CLI.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfigError = 2;

struct RunResult {
    Json report;
    int exit_code = kExitPass;
};

// Runs the requested suites once at the configured parameters and returns
// the JSON report. Check failures give exit 1; inadmissible parameters,
// oversized modules, and degenerate parameter sets (every affected check
// skipped with a diagnosis) give exit 2.
RunResult run(const RunConfig& config);

// Runs the requested suites at `count` pseudo-random parameter points drawn
// from the seeded generator. Degenerate points are recorded and skipped;
// the exit code is 1 iff some point produced a hard check failure. The
// report carries no timing data, so reruns with the same seed are
// byte-identical.
RunResult run_sweep(const RunConfig& config);

// Serializes a report to a file; throws ConfigError on I/O failure.
void write_report(const Json& report, const std::string& path);

} // namespace qracah
