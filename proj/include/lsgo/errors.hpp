#pragma once

#include <stdexcept>
#include <string>

namespace lsgo {

// Bad problem / campaign / CLI configuration.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid value handed to a numeric operation (empty vector, NaN input,
// out-of-bounds insertion, mismatched partition universes, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Least-squares fit could not be completed; callers may widen the sample set.
struct FitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class BudgetExhausted : public std::runtime_error {
public:
    explicit BudgetExhausted(long long used)
        : std::runtime_error("fitness evaluation budget exhausted after " + std::to_string(used) +
                             " evaluations"),
          fes_used_(used) {}

    long long fes_used() const noexcept { return fes_used_; }

private:
    long long fes_used_;
};

}  // namespace lsgo
