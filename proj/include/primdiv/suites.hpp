#pragma once

#include <string>
#include <vector>

#include "primdiv/scan.hpp"

namespace primdiv {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    double elapsed_ms = 0;
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return !checks.empty();
    }
};

std::vector<std::string> suite_names();

/// Runs a registered invariant suite; deterministic for a fixed config.
/// Unknown names throw std::invalid_argument (a usage error at the CLI).
SuiteResult run_suite(const std::string& name, const ScanConfig& config = {});

}  // namespace primdiv
