// Verification campaign front end: config parsing, the suite registry,
// seeded corpus generation, and machine-readable reports.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hermite2d/core.hpp"

namespace h2d::harness {

// ---------------------------------------------------------------------------
// Configuration: a small key-value format with nested [suite.<id>] tables.
// Values are numbers, quoted strings, booleans, or flat arrays of numbers.

struct SuiteConfig {
    std::string id;
    std::map<std::string, double> numbers;
    std::map<std::string, std::string> strings;
    std::map<std::string, std::vector<double>> arrays;

    double number(const std::string& key, double fallback) const;
    int integer(const std::string& key, int fallback) const;
    std::string text(const std::string& key, const std::string& fallback) const;
    std::vector<int> int_array(const std::string& key, std::vector<int> fallback) const;

    double tolerance() const;               // required, must be > 0
    bool absolute_mode() const;             // "mode" = "abs" | "rel" (default rel)
};

struct CampaignConfig {
    std::uint64_t seed = 20260808;
    int jobs = 0;  // 0: library default
    bool fail_on_not_converged = true;
    std::string output;
    std::string format = "json";
    std::vector<SuiteConfig> suites;

    static CampaignConfig parse(const std::string& text);
    static CampaignConfig parse_file(const std::string& path);
};

// the bundled default campaign (also shipped as configs/default.toml)
const std::string& default_config_text();

// ---------------------------------------------------------------------------
// Records

enum class CheckStatus { pass, fail, not_converged, domain_skip };
const char* status_name(CheckStatus s);

struct CheckRecord {
    std::string params;
    Complex lhs{};
    Complex rhs{};
    double abs_err = 0.0;
    double rel_err = 0.0;  // abs_err / (1 + |lhs|)
    int degree_or_points = 0;
    double wall_ms = 0.0;
    CheckStatus status = CheckStatus::pass;
};

struct SuiteResult {
    std::string id;
    std::string tag;
    double tolerance = 0.0;
    bool absolute_mode = false;
    std::vector<CheckRecord> records;
    double wall_ms = 0.0;
    int passes = 0, fails = 0, not_converged = 0, skips = 0;
};

struct CampaignResult {
    std::uint64_t seed = 0;
    std::vector<SuiteResult> suites;
    std::map<std::string, std::string> metadata;
    double wall_ms = 0.0;
    int checks = 0, passes = 0, fails = 0, not_converged = 0, skips = 0;
    bool ok(bool fail_on_not_converged) const {
        return fails == 0 && (!fail_on_not_converged || not_converged == 0);
    }
};

// ---------------------------------------------------------------------------
// Catalog and runner

struct SuiteInfo {
    std::string id;
    std::string tag;  // identity tag naming what the suite verifies
    std::string description;
};

std::vector<SuiteInfo> list_suites();

// Executes all configured suites in order.  Throws ConfigError for unknown
// suite ids or invalid tolerances.  Deterministic for a fixed config + seed.
CampaignResult run_campaign(const CampaignConfig& config);

// Reports.  Timing fields are emitted only when include_timing is set, which
// is what makes repeated runs byte-comparable.
std::string to_json(const CampaignResult& result, bool include_timing = true);
std::string to_csv(const CampaignResult& result, bool include_timing = true);
std::string summary_lines(const CampaignResult& result);

}  // namespace h2d::harness
