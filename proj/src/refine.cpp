#include "lsgo/refine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lsgo {

RefineResult local_refine(const slice_fn& g, double x0, double lo, double hi,
                          const RefineOptions& opt) {
    const double range = hi - lo;
    const double step_tol = opt.step_tol_fraction * range;
    const double h = opt.fd_fraction * range;

    RefineResult res;
    res.x = x0;

    auto eval = [&](double x) {
        ++res.evals;
        return g(x);
    };
    auto clamp = [&](double x) {
        return opt.clamp_to_bounds ? std::min(std::max(x, lo), hi) : x;
    };

    double x = clamp(x0);
    double fx = eval(x);
    if (!std::isfinite(fx)) {  // degenerate slice: report the start point untouched
        res.x = x0;
        res.f = fx;
        return res;
    }
    double best_x = x, best_f = fx;

    double prev_x = std::numeric_limits<double>::quiet_NaN();
    double prev_grad = std::numeric_limits<double>::quiet_NaN();
    double step_cap = opt.first_step_fraction * range;

    for (int iter = 0; iter < opt.max_iters; ++iter) {
        if (res.evals + 3 > opt.eval_cap) break;
        const double xp = x + h;
        const double xm = x - h;
        const double fp = eval(xp);
        const double fm = eval(xm);
        if (!std::isfinite(fp) || !std::isfinite(fm)) break;
        if (fp < best_f) best_f = fp, best_x = xp;
        if (fm < best_f) best_f = fm, best_x = xm;
        const double grad = (fp - fm) / (2.0 * h);
        if (grad == 0.0) break;

        double curv = std::numeric_limits<double>::quiet_NaN();
        if (std::isfinite(prev_grad) && x != prev_x) curv = (grad - prev_grad) / (x - prev_x);
        double step;
        if (std::isfinite(curv) && curv > 0.0) {
            step = -grad / curv;
        } else {
            step = (grad > 0.0 ? -1.0 : 1.0) * step_cap;
        }
        if (std::abs(step) > step_cap) step = std::copysign(step_cap, step);

        bool accepted = false;
        for (int bt = 0; bt < 2 && res.evals < opt.eval_cap; ++bt) {
            const double xn = clamp(x + step);
            if (xn == x) break;
            const double fn = eval(xn);
            if (std::isfinite(fn) && fn < best_f) best_f = fn, best_x = xn;
            if (std::isfinite(fn) && fn < fx) {
                prev_x = x;
                prev_grad = grad;
                res.last_step = std::abs(xn - x);
                x = xn;
                fx = fn;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) break;
        // allow the trust radius to grow so far-out stationary points are reachable
        step_cap = std::max(opt.first_step_fraction * range, 2.0 * res.last_step);
        if (res.last_step < step_tol) break;
    }

    res.x = best_x;
    res.f = best_f;
    return res;
}

}  // namespace lsgo
