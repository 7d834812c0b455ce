#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lsgo/decomposition.hpp"
#include "lsgo/objective.hpp"
#include "lsgo/types.hpp"

namespace lsgo {

struct OptimizerConfig {
    int population_cap = 50;
    int population_per_dim = 5;
    double f_mean = 0.5;
    double f_sdev = 0.3;
    double cr_mean = 0.9;
    double cr_sdev = 0.1;
    bool self_adaptive = true;
    int generations_per_turn = 50;  // round-robin cycle length
    long long max_fes = 0;          // total cap, shared with the decomposition run
    std::uint64_t seed = 0;
};

struct Subpopulation {
    index_list group;
    matrix_t individuals;  // |group| x pop
    vector_t fitness;
    long long eval_stamp = -1;  // context-vector version the fitnesses were measured against
};

// Embed a sub-solution into a copy of the context vector and evaluate it.
// Exactly one evaluation; the context vector itself is untouched.
double evaluate_subsolution(CountingObjective& obj, const vector_t& cv, const index_list& group,
                            const vector_t& sub);

// One generation of rand/1/bin with per-individual control parameters and
// greedy selection. Returns false when the budget ran out mid-generation;
// replacements already made are kept.
bool de_generation(Subpopulation& pop, const vector_t& cv, CountingObjective& obj,
                   const OptimizerConfig& cfg, Rng& rng);

struct OptimizationResult {
    vector_t best;
    double best_f = 0.0;
    std::vector<std::pair<long long, double>> history;  // (fes so far, best fitness)
    long long fes_total = 0;
};

// Round-robin cooperative optimization over the decomposition's groups. The
// context vector starts from the decomposition (inheriting located optima);
// separable variables with located optima are frozen, while baseline
// decompositions without optima have their separable variables pooled into
// one extra group. audit evaluates without touching the budget and is used
// only for reporting.
OptimizationResult decc_optimize(CountingObjective& obj, const Decomposition& decomposition,
                                 const OptimizerConfig& cfg, const objective_fn& audit);

}  // namespace lsgo
