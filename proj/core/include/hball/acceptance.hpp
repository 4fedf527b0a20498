#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hball {

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    double seconds;
    std::vector<std::string> details;  // deterministic: no timings, no addresses
};

struct AcceptanceOptions {
    std::uint64_t seed = 20240817;
};

/// Runs the full acceptance suite. Each criterion checks its stated
/// tolerances and its runtime budget; details record the measured values.
std::vector<CriterionResult> runAcceptanceSuite(const AcceptanceOptions& opt = {});

bool allPassed(const std::vector<CriterionResult>& results);

// One "[PASS]/[FAIL] id name (t s)" line per criterion.
void printAcceptanceResults(const std::vector<CriterionResult>& results, std::ostream& out);

// Byte-stable JSON report (timings excluded so reruns under one seed match).
std::string acceptanceReportJson(const std::vector<CriterionResult>& results, std::uint64_t seed);

}  // namespace hball
