#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symtriple/identity.hpp"

namespace symtriple::verify {

struct IdentityReport {
    std::string suite;
    long cases_run = 0;
    std::optional<IdentityFailure> first_failure;
    long elapsed_ms = 0;
    // Free-form lines that accompany the result, such as tail bounds of the numeric sums.
    std::vector<std::string> notes;

    bool passed() const { return !first_failure.has_value(); }
};

struct RunConfig {
    int order = 25;
    std::uint64_t seed = 0;
    // Number of samples for sampled properties whose count is not fixed by the identity.
    int trials = 64;
    // Suite names, or the single entry "all".
    std::vector<std::string> suites{"all"};
    // When false, elapsed_ms is reported as 0 so that output is byte-identical across runs.
    bool timing = true;
};

struct SuiteInfo {
    std::string name;
    std::string description;
};

// All suites, sorted by name.
const std::vector<SuiteInfo>& suites();

// Runs the selected suites in name order. Throws UnknownSuite for a name not in suites()
// and BadParams when order or trials is below 1.
std::vector<IdentityReport> run_suite(const RunConfig& config);

// [{suite, status, cases_run, first_failure?, elapsed_ms, notes?}, ...]
std::string report_json(const std::vector<IdentityReport>& reports, int indent = 2);

}  // namespace symtriple::verify
