#pragma once

#include <atomic>
#include <functional>
#include <optional>

#include "lsgo/errors.hpp"
#include "lsgo/problem.hpp"
#include "lsgo/types.hpp"

namespace lsgo {

using objective_fn = std::function<double(const vector_t&)>;

// Black-box evaluation wrapper. Each call costs exactly one fitness
// evaluation; the count never decreases and never passes an optional cap.
class CountingObjective {
public:
    CountingObjective(objective_fn fn, vector_t lb, vector_t ub,
                      std::optional<long long> budget = std::nullopt)
        : fn_(std::move(fn)), lb_(std::move(lb)), ub_(std::move(ub)), budget_(budget) {}

    double operator()(const vector_t& x) {
        if (budget_ && used_.load(std::memory_order_relaxed) >= *budget_)
            throw BudgetExhausted(used_.load(std::memory_order_relaxed));
        used_.fetch_add(1, std::memory_order_relaxed);
        return fn_(x);
    }

    long long fes_used() const { return used_.load(std::memory_order_relaxed); }

    bool can_spend(long long k = 1) const {
        return !budget_ || used_.load(std::memory_order_relaxed) + k <= *budget_;
    }

    std::optional<long long> budget() const { return budget_; }
    const vector_t& lb() const { return lb_; }
    const vector_t& ub() const { return ub_; }
    int dim() const { return static_cast<int>(lb_.size()); }

private:
    objective_fn fn_;
    vector_t lb_, ub_;
    std::optional<long long> budget_;
    std::atomic<long long> used_{0};
};

// The problem must outlive the returned objective.
inline CountingObjective make_objective(const BenchmarkProblem& p,
                                        std::optional<long long> budget = std::nullopt) {
    return CountingObjective([&p](const vector_t& x) { return p.evaluate_raw(x); }, p.lb, p.ub,
                             budget);
}

}  // namespace lsgo
