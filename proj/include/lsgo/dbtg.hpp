#pragma once

#include "lsgo/detect.hpp"
#include "lsgo/objective.hpp"
#include "lsgo/types.hpp"

namespace lsgo {

struct DbtgResult {
    index_list interacting;  // subset of X_u nonseparable with t, in index order
    long long fes = 0;
    int detections = 0;
};

// Binary-tree extraction of the variables interacting with t. A node judged
// nonseparable is halved (first child takes the extra element, order kept);
// the first child is always tested, and when it proves separable the second
// child is enqueued as nonseparable without a test, since a nonseparable
// parent must hide at least one interacting variable. Singletons popped from
// the queue join the result directly. use_deduction=false disables the
// skipped tests for comparison runs.
DbtgResult dbtg(CountingObjective& obj, int t, const index_list& X_u, double x_t_star,
                double delta, const DetectionConfig& cfg, bool use_deduction = true);

}  // namespace lsgo
