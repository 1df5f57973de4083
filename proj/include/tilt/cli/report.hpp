#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tilt/axioms/classify.hpp"
#include "tilt/cli/job.hpp"

namespace tilt::cli {

inline constexpr const char* kReportSchema = "tiltbench/report/1";
inline constexpr const char* kVersion = "1.0.0";
inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr std::size_t kDefaultTrials = 100;

enum ExitCode { kAllPass = 0, kCheckFailed = 1, kInputError = 2, kRouteDisagreement = 3 };

struct RunOptions {
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
};

// Per-check seed, then --seed, then the job seed, then TILTBENCH_SEED, then 42.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag, const std::optional<std::uint64_t>& job);

struct ReportEntry {
    std::string check;
    std::size_t d = 0;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::vector<axioms::Verdict> verdicts;
    // Set when two routes disagreed; the verdicts are then empty.
    std::optional<std::string> disagreement;
    std::vector<axioms::RouteResult> disagreement_routes;
};

struct CheckReport {
    std::string job_name;
    Json job;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::vector<ReportEntry> entries;
    double elapsed_ms = 0;
};

// Runs the requested checks in dependency order; entries are sorted by (check, d, seed, trials).
CheckReport run(const JobSpec& spec, const RunOptions& opt = {});
int exit_code(const CheckReport& report);
std::string overall_status(const CheckReport& report);

// Timing is left out so equal inputs give byte-identical output.
Json to_json(const CheckReport& report);
std::string to_text(const CheckReport& report);

Json verdict_to_json(const axioms::Verdict& v);
Json witness_to_json(const axioms::Witness& w);
// Rebuilds a witness against the subcategory it came from.
axioms::Witness witness_from_json(const approx::SubcategoryX& x, const Json& j);

// Subcategory add(M) of a job.
approx::SubcategoryX subcategory(const JobSpec& spec);

}  // namespace tilt::cli
