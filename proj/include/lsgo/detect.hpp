#pragma once

#include "lsgo/objective.hpp"
#include "lsgo/types.hpp"

namespace lsgo {

struct DetectionConfig {
    vector_t cv;        // baseline solution; lb by convention
    vector_t cv_prime;  // perturbed per-variable values; (lb+ub)/2 by convention
    double epsilon = 0.0;  // additive-criterion roundoff threshold
    double eta = 1e-13;    // optimum-persistence indifference band, relative
};

DetectionConfig default_detection_config(const vector_t& lb, const vector_t& ub);

// f(cv <- i:xi_a, j:xj) - f(cv <- i:xi_b, j:xj); exactly 2 evaluations.
double delta_fitness(CountingObjective& obj, const vector_t& cv, int i, double xi_a, double xi_b,
                     int j, double xj);

// Additive-separability check: the fitness variation of i is unaffected by
// where j sits. Exactly 4 evaluations.
bool criterion1_separable(CountingObjective& obj, const DetectionConfig& cfg, int i, int j,
                          double xi_a, double xi_b, double xj_a, double xj_b);

// Monotonicity-sign check: both variations share a sign. Exactly 4 evaluations.
bool criterion2_separable(CountingObjective& obj, const DetectionConfig& cfg, int i, int j,
                          double xi_a, double xi_b, double xj_a, double xj_b);

struct DetectResult {
    bool is_sep = false;
    long long fes = 0;
};

// Optimum-persistence test: perturb every variable in X_u to cv_prime and
// check that x_t_star still beats its delta-neighbours. Exactly 3
// evaluations. The probes may leave the box: a located optimum pinned to a
// bound is non-stationary, and probing across the bound is what exposes it.
DetectResult detect_sep(CountingObjective& obj, int t, const index_list& X_u, double x_t_star,
                        double delta, const DetectionConfig& cfg);

}  // namespace lsgo
