#include "lsgo/svg.hpp"

#include <algorithm>
#include <cmath>

#include "lsgo/dbtg.hpp"
#include "lsgo/errors.hpp"
#include "lsgo/refine.hpp"

namespace lsgo {

Decomposition svg_decompose(CountingObjective& obj, const SvgConfig& cfg) {
    const int n = obj.dim();
    const long long before = obj.fes_used();

    DetectionConfig det;
    det.cv = obj.lb();
    det.cv_prime = 0.5 * (obj.lb() + obj.ub());
    det.eta = cfg.eta;

    Decomposition d;
    d.has_located_optima = true;

    index_list undetected(n);
    for (int i = 0; i < n; ++i) undetected[i] = i;
    Rng rng(derive_seed(cfg.seed, 7));

    int current_target = -1;
    try {
        while (!undetected.empty()) {
            const int pick =
                cfg.random_target_order ? rng.below(static_cast<int>(undetected.size())) : 0;
            const int t = undetected[pick];
            current_target = t;
            undetected.erase(undetected.begin() + pick);

            const TlprResult located = tlpr(obj, t, det.cv, cfg.tlpr);
            det.cv[t] = located.x_star;

            if (undetected.empty()) {
                d.seps.emplace_back(t, located.x_star);
                current_target = -1;
                break;
            }

            const DbtgResult found =
                dbtg(obj, t, undetected, located.x_star, located.delta, det, cfg.use_deduction);
            if (found.interacting.empty()) {
                d.seps.emplace_back(t, located.x_star);
            } else {
                index_list group = found.interacting;
                group.push_back(t);
                std::sort(group.begin(), group.end());
                d.nonseps.push_back(std::move(group));
                index_list rest;
                rest.reserve(undetected.size());
                std::set_difference(undetected.begin(), undetected.end(),
                                    found.interacting.begin(), found.interacting.end(),
                                    std::back_inserter(rest));
                undetected = std::move(rest);
            }
            current_target = -1;
        }

        // Re-polish the located optima now that every coordinate of the
        // context vector is in place; early targets were located against a
        // context that still sat at the lower bound.
        if (cfg.polish_separable) {
            RefineOptions ropt;
            ropt.max_iters = cfg.tlpr.refine_max_iters;
            ropt.eval_cap = cfg.tlpr.refine_eval_cap;
            ropt.clamp_to_bounds = false;
            vector_t point = det.cv;
            for (auto& [i, v] : d.seps) {
                point = det.cv;
                auto slice = [&](double x) {
                    point[i] = x;
                    return obj(point);
                };
                const RefineResult r = local_refine(slice, v, obj.lb()[i], obj.ub()[i], ropt);
                if (std::isfinite(r.f)) {
                    v = r.x;
                    det.cv[i] = r.x;
                }
            }
        }
    } catch (const BudgetExhausted&) {
        d.exhausted = true;
        // Anything not yet classified is grouped together so the partition
        // still covers every variable.
        index_list leftovers = undetected;
        if (current_target >= 0) leftovers.push_back(current_target);
        std::sort(leftovers.begin(), leftovers.end());
        if (leftovers.size() == 1) {
            d.seps.emplace_back(leftovers.front(), det.cv[leftovers.front()]);
        } else if (!leftovers.empty()) {
            d.nonseps.push_back(std::move(leftovers));
        }
    }

    d.cv = det.cv;
    d.fes_used = obj.fes_used() - before;
    return d;
}

}  // namespace lsgo
