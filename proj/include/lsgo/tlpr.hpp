#pragma once

#include <string>

#include "lsgo/objective.hpp"
#include "lsgo/types.hpp"

namespace lsgo {

struct TlprConfig {
    int samples_per_layer = 100;
    double trust_fraction = 0.10;      // trust-region width as a fraction of the range
    int window = 6;                    // samples per local quintic model
    double delta_floor_fraction = 1e-6;
    double delta_cap_fraction = 1e-2;
    int refine_max_iters = 20;
    int refine_eval_cap = 61;
    std::string trace_path;  // when set, per-sample CSV rows (x,y,layer,window) are appended
};

struct TlprResult {
    double x_star = 0.0;
    double delta = 0.0;
    long long fes_used = 0;
};

// Locates the optimum of variable t along the slice through cv with a coarse
// quadratic layer, piecewise quintic models inside the trust region, and a
// quasi-Newton polish. delta is the polish's last accepted step, floored and
// capped relative to the variable's range.
TlprResult tlpr(CountingObjective& obj, int t, const vector_t& cv, const TlprConfig& cfg = {});

}  // namespace lsgo
