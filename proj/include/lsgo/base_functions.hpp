#pragma once

#include <Eigen/Core>

#include <cmath>
#include <string_view>

#include "lsgo/errors.hpp"
#include "lsgo/types.hpp"

namespace lsgo {

enum class BaseFunction { elliptic, rastrigin, exponential, ackley, ridge, schwefel };

const char* to_string(BaseFunction kind);
BaseFunction base_function_from_string(std::string_view name);

struct Interval {
    double lo;
    double hi;
};

// Search domain each base function is conventionally posed on.
constexpr Interval domain_of(BaseFunction kind) {
    switch (kind) {
        case BaseFunction::rastrigin: return {-5.0, 5.0};
        case BaseFunction::exponential:
        case BaseFunction::ackley: return {-32.0, 32.0};
        default: return {-100.0, 100.0};
    }
}

// Coordinate weights for the two weighted kernels. Cached per component by
// BenchmarkProblem so the per-evaluation cost is a dot product.
vector_t elliptic_weights(Eigen::Index n);     // 1e6^((i-1)/(n-1)), i = 1..n
vector_t exponential_weights(Eigen::Index n);  // i/n, i = 1..n

inline constexpr double two_pi = 6.283185307179586476925286766559;

template <typename Derived>
double elliptic(const Eigen::MatrixBase<Derived>& x, const vector_t& weights) {
    return (x.derived().array().square() * weights.array()).sum();
}

template <typename Derived>
double elliptic(const Eigen::MatrixBase<Derived>& x) {
    return elliptic(x, elliptic_weights(x.size()));
}

template <typename Derived>
double rastrigin(const Eigen::MatrixBase<Derived>& x) {
    const auto a = x.derived().array();
    return (a.square() - 10.0 * (two_pi * a).cos()).sum() + 10.0 * static_cast<double>(x.size());
}

template <typename Derived>
double exponential(const Eigen::MatrixBase<Derived>& x, const vector_t& weights) {
    const double n = static_cast<double>(x.size());
    const double s = (x.derived().array().square() * weights.array()).sum();
    return 200.0 - 200.0 * std::exp(-std::sqrt(s) / n);
}

template <typename Derived>
double exponential(const Eigen::MatrixBase<Derived>& x) {
    return exponential(x, exponential_weights(x.size()));
}

template <typename Derived>
double ackley(const Eigen::MatrixBase<Derived>& x) {
    const double n = static_cast<double>(x.size());
    const double rms = std::sqrt(x.derived().squaredNorm() / n);
    const double mc = (two_pi * x.derived().array()).cos().sum() / n;
    return -20.0 * std::exp(-0.2 * rms) - std::exp(mc) + 20.0 + std::exp(1.0);
}

template <typename Derived>
double ridge(const Eigen::MatrixBase<Derived>& x) {
    return static_cast<double>(x.size()) * std::sqrt(x.derived().squaredNorm());
}

template <typename Derived>
double schwefel(const Eigen::MatrixBase<Derived>& x) {
    double prefix = 0.0;
    double acc = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        prefix += x.derived()[i];
        acc += prefix * prefix;
    }
    return acc;
}

// Dispatcher used by tests and by callers that do not hold cached weights.
double eval_base(BaseFunction kind, const vector_t& x);

}  // namespace lsgo
