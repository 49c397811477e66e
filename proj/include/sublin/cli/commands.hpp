#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sublin/cli/run_config.hpp"

namespace sublin::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

// Entry point of the command-line tool. Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

Graph load_instance(const RunConfig& cfg, std::uint64_t seed, std::optional<std::size_t> n = std::nullopt);

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

// Checks a finished pipeline run against ground truth computed from g.
std::vector<CheckResult> verify_run(const Graph& g, const RunConfig& cfg, const PipelineResult& run);

// Property battery over bundled small instances (or the configured instance).
std::vector<CheckResult> verification_battery(const RunConfig& cfg);

struct SweepRow {
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::size_t m = 0;
    std::optional<std::size_t> mu_exact;
    EstimateReport report;
};

struct SweepResult {
    std::vector<SweepRow> rows;  // sorted by (n, seed)
    double slope = 0;            // least-squares slope of log(queries) against log(n); NaN for one size
};

SweepResult run_sweep(const RunConfig& cfg);

// Least-squares slope of log(y) against log(x). NaN when fewer than two distinct x.
double loglog_slope(const std::vector<std::pair<double, double>>& points);

}  // namespace sublin::cli
