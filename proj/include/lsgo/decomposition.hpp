#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lsgo/types.hpp"

namespace lsgo {

// Output of a decomposer: separable variables (with located optima when the
// algorithm produces them), nonseparable groups, and the context vector the
// run finished with. fes_used is the exact evaluation count of the run.
struct Decomposition {
    std::vector<std::pair<int, double>> seps;  // (variable index, located optimum or NaN)
    std::vector<index_list> nonseps;
    vector_t cv;
    long long fes_used = 0;
    bool exhausted = false;      // evaluation budget ran out; contents are best-effort
    bool has_located_optima = true;

    index_list separable_indices() const;
    bool covers_exactly(int n) const;  // every variable exactly once
};

std::string decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const std::string& text);
void save_decomposition(const Decomposition& d, const std::string& path);
Decomposition load_decomposition(const std::string& path);

}  // namespace lsgo
