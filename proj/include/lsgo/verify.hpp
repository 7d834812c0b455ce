#pragma once

#include <string>
#include <vector>

namespace lsgo {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Fast self-checks over the core machinery: the worked five-variable grouping
// example, the criteria-separation regressions, metric identities, and one
// scaled fully-separable decomposition with its evaluation-count window.
std::vector<CheckResult> run_verify_checks();

}  // namespace lsgo
