#pragma once

#include <functional>

#include "lsgo/types.hpp"

namespace lsgo {

using slice_fn = std::function<double(double)>;

struct RefineOptions {
    int max_iters = 20;
    int eval_cap = 61;            // hard ceiling on slice evaluations per call
    double step_tol_fraction = 1e-8;   // of (hi - lo)
    double fd_fraction = 1e-7;         // finite-difference half-step, of (hi - lo)
    double first_step_fraction = 0.1;  // of (hi - lo)
    bool clamp_to_bounds = true;  // when false the iterate may leave [lo, hi]
};

struct RefineResult {
    double x = 0.0;
    double f = 0.0;
    double last_step = 0.0;  // magnitude of the last accepted move; 0 if none
    long long evals = 0;
};

// One-dimensional quasi-Newton descent: central-difference gradient, secant
// curvature, halving backtracks, strict-improvement acceptance. Stops when
// the accepted step drops below step_tol, when an iteration fails to improve,
// or at the iteration/evaluation caps. With clamp_to_bounds off the iterate
// may walk outside [lo, hi], which matters when the slice minimum of a
// coupled variable lies beyond the sampling box.
RefineResult local_refine(const slice_fn& g, double x0, double lo, double hi,
                          const RefineOptions& opt = {});

}  // namespace lsgo
