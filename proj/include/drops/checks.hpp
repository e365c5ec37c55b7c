#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace drops {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail; ///< worst margins / measured values, for the report line
};

/// The full property suite: each check is self-contained (fixed seeds,
/// pinned tolerances) and returns its worst observed margin in
/// `detail`. `progress` gets one "[PASS]/[FAIL] name: detail" line per
/// check as it completes.
std::vector<CheckResult> run_all_checks(std::ostream& progress);

} // namespace drops
