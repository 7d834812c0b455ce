#include "lsgo/rotation.hpp"

#include <Eigen/QR>

#include "lsgo/errors.hpp"

namespace lsgo {

matrix_t make_rotation(int m, std::uint64_t seed) {
    if (m < 1) throw ConfigError("rotation size must be at least 1");
    Rng rng(seed);
    matrix_t a(m, m);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) a(r, c) = rng.normal();
    Eigen::HouseholderQR<matrix_t> qr(a);
    matrix_t q = qr.householderQ();
    const vector_t diag = qr.matrixQR().diagonal();
    for (int i = 0; i < m; ++i)
        if (diag[i] < 0.0) q.col(i) = -q.col(i);
    return q;
}

double orthogonality_defect(const matrix_t& r) {
    matrix_t g = r * r.transpose();
    g.diagonal().array() -= 1.0;
    return g.cwiseAbs().maxCoeff();
}

}  // namespace lsgo
