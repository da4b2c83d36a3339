#pragma once

#include <string>
#include <vector>

#include "uq/rewrite.hpp"

namespace uq {

struct CheckResult {
    std::string id;
    bool passed;
    std::string detail;  // empty on pass unless informative
};

// The named regression checks for a preset type: relation tables, root
// vectors, braid relations, PBW/straightening properties, central and
// normal elements, automorphism behavior, and a numeric re-check of every
// identity at q = 3/2. With inject_failure a deliberately false identity
// is appended (exit-code self test).
std::vector<CheckResult> paper_checks(const RewriteSystem& rs, TypeTag type,
                                      bool inject_failure = false);

bool all_passed(const std::vector<CheckResult>& checks);

// One line per check; machine mode prints "PASS|FAIL <check-id> <detail>".
std::string format_checks(const std::vector<CheckResult>& checks,
                          bool machine);

}  // namespace uq
