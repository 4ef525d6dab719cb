#pragma once

#include <string>
#include <vector>

namespace simcore {

struct CheckResult {
    std::string name;
    bool passed = false;
    /// First counterexample or a short summary of what was checked.
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;

    bool passed() const;
};

/// Suite names in the fixed order used by run_all.
std::vector<std::string> suite_names();

/// Runs one named suite of exhaustive invariant checks. N caps series
/// truncations and oracle ranges; exhaustive partition scales are fixed per
/// check. Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, int N);

std::vector<SuiteResult> run_all(int N);

}  // namespace simcore
