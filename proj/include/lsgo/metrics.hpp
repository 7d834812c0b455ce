#pragma once

#include <optional>

#include "lsgo/decomposition.hpp"
#include "lsgo/problem.hpp"
#include "lsgo/types.hpp"

namespace lsgo {

// Partition of {0..n-1} into disjoint nonempty groups.
struct Partition {
    std::vector<index_list> groups;
};

Partition to_partition(const GroundTruthDecomposition& gt);
// Separable variables become singletons alongside the nonseparable groups.
Partition to_partition(const Decomposition& d);

// Normalized mutual information between two partitions of the same
// n-element universe, on a 0..100 scale; 100 iff identical. Zero-count
// confusion cells contribute nothing. Both-partitions-trivial (single whole
// group each) is defined as 100 since the partitions coincide.
double nmi(const Partition& a, const Partition& b, int n);

struct RhoSplit {
    std::optional<double> rho1;  // over ground-truth-separable variables
    std::optional<double> rho2;  // over ground-truth-nonseparable variables
};

// NMI restricted to each side of the ground truth. The ideal partition is
// singletons on the separable side and the true groups on the nonseparable
// side; the produced partition is intersected with the side's variable set,
// dropping empties. A side with no variables yields an absent value.
RhoSplit rho_split(const GroundTruthDecomposition& gt, const Decomposition& result, int n);

// Euclidean distance between the context vector and the true optimum over
// the variables the algorithm identified as separable; 0 when none were.
double dis(const Decomposition& result, const BenchmarkProblem& problem);

}  // namespace lsgo
