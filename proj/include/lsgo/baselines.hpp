#pragma once

#include <optional>

#include "lsgo/decomposition.hpp"
#include "lsgo/objective.hpp"

namespace lsgo {

struct BaselineConfig {
    // Additive-criterion threshold. Defaults to 1e-10 * (1 + |f(lb)|).
    std::optional<double> epsilon;
};

// Pairwise additive-interaction grouping: each not-yet-grouped variable is
// tested against every later ungrouped one; interacting partners join its
// group within the same pass. Separable leftovers carry no located optima.
Decomposition dg_decompose(CountingObjective& obj, const BaselineConfig& cfg = {});

// Recursive-halving subset decomposer built on the same additive criterion,
// with whole-subset perturbations and a cached base point.
Decomposition rdg_decompose(CountingObjective& obj, const BaselineConfig& cfg = {});

}  // namespace lsgo
