#pragma once

#include <Eigen/Core>

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace lsgo {

using vector_t = Eigen::VectorXd;
using matrix_t = Eigen::MatrixXd;
using index_list = std::vector<int>;

// splitmix64 finalizer; used to derive independent sub-streams from one seed.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return mix64(seed ^ mix64(stream));
}

// Thin RNG over mt19937_64. The std::*_distribution adapters are
// implementation-defined, so the mappings here are spelled out to keep
// sequences reproducible across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Box-Muller, cosine branch only.
    double normal() {
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    double normal(double mean, double sdev) { return mean + sdev * normal(); }

    // Unbiased integer in [0, n).
    int below(int n) {
        const auto bound = static_cast<std::uint64_t>(n);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t r = gen_();
        while (r >= limit) r = gen_();
        return static_cast<int>(r % bound);
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace lsgo
