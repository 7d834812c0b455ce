#pragma once

#include <cstdint>

#include "lsgo/types.hpp"

namespace lsgo {

// Seeded random orthogonal matrix: QR of a standard-normal matrix with the
// signs of R's diagonal folded into Q. Deterministic per (m, seed).
matrix_t make_rotation(int m, std::uint64_t seed);

// max|R*R^T - I|; rotations are required to stay below 1e-10.
double orthogonality_defect(const matrix_t& r);

}  // namespace lsgo
