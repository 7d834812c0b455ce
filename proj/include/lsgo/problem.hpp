#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lsgo/base_functions.hpp"
#include "lsgo/types.hpp"

namespace lsgo {

// One summand of a composed benchmark function: a base kernel applied to a
// contiguous slice of the translated decision vector, optionally rotated.
struct Component {
    int start = 0;  // 0-based offset
    int size = 0;
    BaseFunction kind = BaseFunction::elliptic;
    std::optional<matrix_t> rotation;  // size x size
    vector_t weights;                  // cached elliptic/exponential weights; empty otherwise

    bool nonseparable() const {
        return size >= 2 && (rotation.has_value() || kind == BaseFunction::schwefel);
    }
};

struct GroundTruthDecomposition {
    index_list separable;               // 0-based variable indices
    std::vector<index_list> groups;     // disjoint nonseparable subcomponents
};

class BenchmarkProblem {
public:
    int func_id = 0;
    int n = 0;
    int m = 0;
    std::uint64_t seed = 0;
    vector_t o;   // translation; the composed function vanishes there
    vector_t lb;
    vector_t ub;
    std::vector<Component> components;

    // Plain evaluation, no bookkeeping. Thread-safe.
    double evaluate_raw(const vector_t& x) const;

    GroundTruthDecomposition ground_truth() const;
};

// func_id in 1..21, structure and kinds per the suite's composition table.
BenchmarkProblem build_problem(int func_id, int n, int m, std::uint64_t seed);

// Key/value problem spec document. With embed_payloads the translation vector
// and rotation matrices are stored as canonical float text and reproduce the
// problem bit-exactly; otherwise they are regenerated from the seed.
std::string problem_spec_text(const BenchmarkProblem& p, bool embed_payloads);
void save_problem_spec(const BenchmarkProblem& p, const std::string& path, bool embed_payloads = true);
BenchmarkProblem parse_problem_spec(const std::string& text);
BenchmarkProblem load_problem_spec(const std::string& path);

std::string ground_truth_json(const GroundTruthDecomposition& gt);

}  // namespace lsgo
