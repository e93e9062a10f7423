#pragma once

#include <string>
#include <vector>

#include "motivic/errors.hpp"

namespace motivic {

/// Knobs for the oracle and invariant sweep.  Defaults run in a few seconds;
/// raising the caps past the library guards turns the affected suites into
/// skips, never failures.
struct SelftestLimits {
    /// Series horizon for the property suites.  At least 6.
    unsigned horizon = 12;
    /// Randomized trials per property suite.  At least 1.
    unsigned pairs = 200;
    /// Caps for the symmetric-group trace oracle sweep.
    unsigned oracle_dim = 3;
    unsigned oracle_m = 4;
    /// Seed for the deterministic generators.
    unsigned seed = 1234;

    void validate() const;
};

struct SuiteResult {
    enum class Status { Pass, Fail, Skip };

    std::string name;
    Status status = Status::Pass;
    /// Check count on pass, first failing identity on fail, guard message
    /// on skip.
    std::string detail;
};

/// Runs every oracle-equivalence and invariant suite under the given limits.
/// Each suite is independent; a failure or skip in one never stops the rest.
std::vector<SuiteResult> run_selftest(const SelftestLimits& limits);

bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace motivic
