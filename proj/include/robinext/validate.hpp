// Self-contained invariant suite: every check exercises production code
// against an identity, bound, or closed form that must hold regardless of
// parameters.  Used by the `validate` command and by tests.
#pragma once

#include <string>
#include <vector>

namespace robinext::validate {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail; // measured value vs. tolerance, or failure description
};

// Runs the full suite (a few seconds); never throws, failures are reported
// in the results.
std::vector<CheckResult> run_all_checks();

} // namespace robinext::validate
