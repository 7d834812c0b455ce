#pragma once

#include <cstdint>

#include "lsgo/decomposition.hpp"
#include "lsgo/detect.hpp"
#include "lsgo/objective.hpp"
#include "lsgo/tlpr.hpp"

namespace lsgo {

struct SvgConfig {
    std::uint64_t seed = 0;
    bool random_target_order = true;  // false: lowest index first (debugging aid)
    bool polish_separable = true;     // final refinement sweep over located optima
    bool use_deduction = true;
    double eta = 1e-13;
    TlprConfig tlpr;
};

// Surrogate-located-optimum grouping. Targets are drawn from the undetected
// set one at a time; each gets its slice optimum located, written into the
// context vector, and its interacting variables extracted by the binary-tree
// search. Variables absorbed into a group are never targeted again. When the
// budget runs out a best-effort partition is returned with the exhausted
// flag set.
Decomposition svg_decompose(CountingObjective& obj, const SvgConfig& cfg = {});

}  // namespace lsgo
