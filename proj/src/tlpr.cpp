#include "lsgo/tlpr.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include "lsgo/errors.hpp"
#include "lsgo/polyfit.hpp"
#include "lsgo/refine.hpp"
#include "lsgo/textio.hpp"

namespace lsgo {

namespace {

struct Tracer {
    std::ofstream out;
    explicit Tracer(const std::string& path) {
        if (!path.empty()) out.open(path, std::ios::app);
    }
    void row(double x, double y, int layer, int window) {
        if (out.is_open())
            out << format_double(x) << ',' << format_double(y) << ',' << layer << ',' << window
                << '\n';
    }
};

}  // namespace

TlprResult tlpr(CountingObjective& obj, int t, const vector_t& cv, const TlprConfig& cfg) {
    if (t < 0 || t >= obj.dim()) throw DomainError("tlpr: variable index out of range");
    const double lo = obj.lb()[t];
    const double hi = obj.ub()[t];
    const double range = hi - lo;
    if (!(range > 0.0)) throw DomainError("tlpr: degenerate bounds");

    const long long fes_at_entry = obj.fes_used();
    Tracer trace(cfg.trace_path);

    vector_t point = cv;
    auto slice = [&](double v) {
        point[t] = v;
        return obj(point);
    };

    const int ns = cfg.samples_per_layer;
    double best_x = lo;
    double best_f = std::numeric_limits<double>::infinity();

    auto sample_grid = [&](double a, double b, vector_t& xs, vector_t& ys, int layer) {
        xs.resize(ns);
        ys.resize(ns);
        for (int i = 0; i < ns; ++i) {
            const double x = a + (b - a) * static_cast<double>(i) / static_cast<double>(ns - 1);
            xs[i] = x;
            ys[i] = slice(x);
            trace.row(x, ys[i], layer, -1);
            if (ys[i] < best_f) {
                best_f = ys[i];
                best_x = x;
            }
        }
    };

    // Layer 1: coarse quadratic over the whole range.
    vector_t xs, ys;
    sample_grid(lo, hi, xs, ys, 1);

    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * range;
    double center = best_x;
    try {
        const vector_t xs_n = (xs.array() - mid) / half;
        const PolyModel quad = fit_poly(xs_n, ys, 2);
        if (!quad.degenerate && quad.coefficients[0] > 0.0)
            center = mid + half * poly_minimum(quad, -1.0, 1.0);
        // concave or near-linear profile: fall back to the best true sample
    } catch (const FitError&) {
        // keep the best-sample center
    }

    // Layer 2: dense samples inside the trust region.
    const double tr_half = 0.5 * cfg.trust_fraction * range;
    const double tr_lo = std::max(lo, center - tr_half);
    const double tr_hi = std::min(hi, center + tr_half);
    vector_t xs2, ys2;
    sample_grid(tr_lo, tr_hi, xs2, ys2, 2);

    // One quintic per window of `window` consecutive samples; the trailing
    // remainder reuses the final `window` samples.
    const int w = cfg.window;
    double cand_x = best_x;
    double cand_score = std::numeric_limits<double>::infinity();
    bool have_candidate = false;
    int window_id = 0;
    auto consider_window = [&](int first) {
        const double wa = xs2[first];
        const double wb = xs2[first + w - 1];
        const double wmid = 0.5 * (wa + wb);
        const double whalf = 0.5 * (wb - wa);
        if (!(whalf > 0.0)) return;
        try {
            const vector_t wx = (xs2.segment(first, w).array() - wmid) / whalf;
            const vector_t wy = ys2.segment(first, w);
            const PolyModel quintic = fit_poly(wx, wy, w - 1);
            const double cn = poly_minimum(quintic, -1.0, 1.0);
            const double cx = wmid + whalf * cn;
            const double model_value = poly_eval(quintic, cn);
            // nearest true sample inside the window
            int nearest = first;
            for (int i = first + 1; i < first + w; ++i)
                if (std::abs(xs2[i] - cx) < std::abs(xs2[nearest] - cx)) nearest = i;
            const double score = ys2[nearest] + model_value;
            trace.row(cx, model_value, 2, window_id);
            if (std::isfinite(score) && score < cand_score) {
                cand_score = score;
                cand_x = cx;
                have_candidate = true;
            }
        } catch (const FitError&) {
            // window skipped; neighbours cover the span
        }
        ++window_id;
    };
    int first = 0;
    for (; first + w <= ns; first += w) consider_window(first);
    if (first < ns) consider_window(ns - w);
    if (!have_candidate) cand_x = best_x;

    RefineOptions ropt;
    ropt.max_iters = cfg.refine_max_iters;
    ropt.eval_cap = cfg.refine_eval_cap;
    ropt.clamp_to_bounds = false;  // coupled slices can have their minimum outside the box
    const RefineResult ref = local_refine(slice, cand_x, lo, hi, ropt);

    TlprResult out;
    if (std::isfinite(ref.f) && ref.f < best_f) {
        out.x_star = ref.x;
    } else {
        out.x_star = best_x;
    }
    const double floor = cfg.delta_floor_fraction * range;
    const double cap = cfg.delta_cap_fraction * range;
    out.delta = std::clamp(ref.last_step, floor, cap);
    out.fes_used = obj.fes_used() - fes_at_entry;
    return out;
}

}  // namespace lsgo
