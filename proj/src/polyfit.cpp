#include "lsgo/polyfit.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <limits>

#include "lsgo/errors.hpp"

namespace lsgo {

PolyModel fit_poly(const vector_t& xs, const vector_t& ys, int degree) {
    if (degree < 0) throw FitError("fit_poly: negative degree");
    const Eigen::Index s = xs.size();
    if (ys.size() != s) throw FitError("fit_poly: xs/ys length mismatch");
    if (s < degree + 1) throw FitError("fit_poly: underdetermined sample count");
    if (!xs.allFinite() || !ys.allFinite()) throw FitError("fit_poly: non-finite samples");

    matrix_t design(s, degree + 1);
    for (Eigen::Index r = 0; r < s; ++r) {
        double p = 1.0;
        for (int c = degree; c >= 0; --c) {
            design(r, c) = p;
            p *= xs[r];
        }
    }
    Eigen::ColPivHouseholderQR<matrix_t> qr(design);
    qr.setThreshold(1e-12);
    if (qr.rank() < degree + 1) throw FitError("fit_poly: singular design matrix");

    PolyModel model;
    model.degree = degree;
    model.coefficients = qr.solve(ys);
    if (!model.coefficients.allFinite()) throw FitError("fit_poly: non-finite coefficients");
    const double scale = model.coefficients.cwiseAbs().maxCoeff();
    model.degenerate =
        degree > 0 && std::abs(model.coefficients[0]) <= 1e-12 * std::max(scale, 1.0);
    return model;
}

double poly_eval(const PolyModel& model, double x) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < model.coefficients.size(); ++i) acc = acc * x + model.coefficients[i];
    return acc;
}

namespace {

// Real roots of the polynomial with the given high-first coefficients, via
// the companion matrix, each polished by a couple of Newton steps.
std::vector<double> real_roots(vector_t coeffs) {
    // strip leading (near-)zeros
    Eigen::Index lead = 0;
    const double scale = std::max(coeffs.cwiseAbs().maxCoeff(), 1e-300);
    while (lead < coeffs.size() && std::abs(coeffs[lead]) <= 1e-14 * scale) ++lead;
    const Eigen::Index deg = coeffs.size() - 1 - lead;
    if (deg <= 0) return {};
    if (deg == 1) return {-coeffs[lead + 1] / coeffs[lead]};

    vector_t monic(deg);
    for (Eigen::Index i = 0; i < deg; ++i) monic[i] = coeffs[lead + 1 + i] / coeffs[lead];
    matrix_t companion = matrix_t::Zero(deg, deg);
    for (Eigen::Index i = 0; i < deg; ++i) companion(0, i) = -monic[i];
    for (Eigen::Index i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;

    Eigen::EigenSolver<matrix_t> es(companion, false);
    std::vector<double> roots;
    auto deriv_at = [&](double x) {
        double v = 0.0, d = 0.0;
        for (Eigen::Index i = lead; i < coeffs.size(); ++i) {
            d = d * x + v;
            v = v * x + coeffs[i];
        }
        return std::pair{v, d};
    };
    for (Eigen::Index i = 0; i < deg; ++i) {
        const auto ev = es.eigenvalues()[i];
        if (std::abs(ev.imag()) > 1e-8 * (1.0 + std::abs(ev.real()))) continue;
        double x = ev.real();
        for (int it = 0; it < 2; ++it) {
            const auto [v, d] = deriv_at(x);
            if (d == 0.0) break;
            const double step = v / d;
            if (!std::isfinite(step) || std::abs(step) > 1.0 + std::abs(x)) break;
            x -= step;
        }
        roots.push_back(x);
    }
    return roots;
}

}  // namespace

double poly_minimum(const PolyModel& model, double lo, double hi) {
    if (!(lo < hi)) throw DomainError("poly_minimum: needs lo < hi");
    std::vector<double> candidates{lo, hi};
    if (model.degree >= 1) {
        vector_t deriv(model.degree);
        for (int i = 0; i < model.degree; ++i)
            deriv[i] = model.coefficients[i] * static_cast<double>(model.degree - i);
        for (double r : real_roots(std::move(deriv)))
            if (r > lo && r < hi) candidates.push_back(r);
    }
    std::sort(candidates.begin(), candidates.end());
    double best_x = lo;
    double best_v = std::numeric_limits<double>::infinity();
    for (double c : candidates) {
        const double v = poly_eval(model, c);
        if (std::isfinite(v) && v < best_v) {
            best_v = v;
            best_x = c;
        }
    }
    return best_x;
}

}  // namespace lsgo
