#pragma once

#include "lsgo/types.hpp"

namespace lsgo {

// Univariate polynomial fitted by least squares. Coefficients are stored
// highest power first: value(x) = c[0]*x^d + ... + c[d].
struct PolyModel {
    int degree = 0;
    vector_t coefficients;
    bool degenerate = false;  // leading coefficient vanished in the fit
};

// Least-squares fit of the given degree. Requires at least degree+1 distinct
// abscissae; throws FitError when underdetermined or numerically singular.
PolyModel fit_poly(const vector_t& xs, const vector_t& ys, int degree);

double poly_eval(const PolyModel& model, double x);

// Argmin of the model over [lo, hi]: real stationary points inside the
// interval compared together with both endpoints, ties toward the smaller
// argument. A constant model returns lo.
double poly_minimum(const PolyModel& model, double lo, double hi);

}  // namespace lsgo
