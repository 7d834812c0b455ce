#include "lsgo/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lsgo/errors.hpp"

namespace lsgo {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// After a budget cut-off, sweep the unclassified variables into one group so
// the partition still covers the universe.
void cover_leftovers(Decomposition& d, int n) {
    std::vector<bool> seen(n, false);
    for (const auto& [i, v] : d.seps) seen[i] = true;
    for (const auto& g : d.nonseps)
        for (int i : g) seen[i] = true;
    index_list leftovers;
    for (int i = 0; i < n; ++i)
        if (!seen[i]) leftovers.push_back(i);
    if (leftovers.size() == 1)
        d.seps.emplace_back(leftovers.front(), kNaN);
    else if (!leftovers.empty())
        d.nonseps.push_back(std::move(leftovers));
}

}  // namespace

Decomposition dg_decompose(CountingObjective& obj, const BaselineConfig& cfg) {
    const int n = obj.dim();
    const long long before = obj.fes_used();
    const vector_t& lb = obj.lb();
    const vector_t mid = 0.5 * (obj.lb() + obj.ub());

    Decomposition d;
    d.has_located_optima = false;
    d.cv = lb;

    const double f_base = obj(lb);
    const double eps = cfg.epsilon ? *cfg.epsilon : 1e-10 * (1.0 + std::abs(f_base));

    std::vector<bool> grouped(n, false);
    vector_t p = lb;
    try {
        for (int i = 0; i < n; ++i) {
            if (grouped[i]) continue;
            p = lb;
            p[i] = mid[i];
            const double f_i = obj(p);
            const double d1 = f_base - f_i;

            index_list group{i};
            for (int j = i + 1; j < n; ++j) {
                if (grouped[j]) continue;
                p = lb;
                p[j] = mid[j];
                const double f_j = obj(p);
                p[i] = mid[i];
                const double f_ij = obj(p);
                const double d2 = f_j - f_ij;
                if (std::abs(d1 - d2) > eps) group.push_back(j);
            }
            if (group.size() > 1) {
                for (int g : group) grouped[g] = true;
                d.nonseps.push_back(std::move(group));
            } else {
                grouped[i] = true;
                d.seps.emplace_back(i, kNaN);
            }
        }
    } catch (const BudgetExhausted&) {
        d.exhausted = true;
        cover_leftovers(d, n);
    }
    d.fes_used = obj.fes_used() - before;
    return d;
}

namespace {

struct SubsetProbe {
    CountingObjective& obj;
    const vector_t& lb;
    vector_t mid;
    double f_base;
    double eps;

    vector_t scratch;

    double eval_perturbed(const index_list& a, const index_list& b) {
        scratch = lb;
        for (int i : a) scratch[i] = mid[i];
        for (int i : b) scratch[i] = mid[i];
        return obj(scratch);
    }

    // Criterion-1 comparison with whole-subset perturbations. f_s1 is the
    // cached evaluation of the base point with s1 moved to mid.
    bool interact(const index_list& s1, double f_s1, const index_list& s2) {
        const double f_s2 = eval_perturbed(s2, {});
        const double f_both = eval_perturbed(s1, s2);
        const double d1 = f_base - f_s1;
        const double d2 = f_s2 - f_both;
        return std::abs(d1 - d2) > eps;
    }

    void extract(const index_list& s1, double f_s1, const index_list& rest, index_list& out) {
        if (rest.empty()) return;
        if (!interact(s1, f_s1, rest)) return;
        if (rest.size() == 1) {
            out.push_back(rest.front());
            return;
        }
        const std::size_t half = (rest.size() + 1) / 2;
        extract(s1, f_s1, index_list(rest.begin(), rest.begin() + half), out);
        extract(s1, f_s1, index_list(rest.begin() + half, rest.end()), out);
    }
};

}  // namespace

Decomposition rdg_decompose(CountingObjective& obj, const BaselineConfig& cfg) {
    const int n = obj.dim();
    const long long before = obj.fes_used();

    Decomposition d;
    d.has_located_optima = false;
    d.cv = obj.lb();

    SubsetProbe probe{obj, obj.lb(), 0.5 * (obj.lb() + obj.ub()), 0.0, 0.0, vector_t()};
    try {
        probe.f_base = obj(obj.lb());
        probe.eps = cfg.epsilon ? *cfg.epsilon : 1e-10 * (1.0 + std::abs(probe.f_base));

        index_list remaining(n);
        for (int i = 0; i < n; ++i) remaining[i] = i;

        while (!remaining.empty()) {
            index_list s1{remaining.front()};
            remaining.erase(remaining.begin());
            while (!remaining.empty()) {
                const double f_s1 = probe.eval_perturbed(s1, {});
                index_list found;
                probe.extract(s1, f_s1, remaining, found);
                if (found.empty()) break;
                index_list rest;
                std::set_difference(remaining.begin(), remaining.end(), found.begin(), found.end(),
                                    std::back_inserter(rest));
                remaining = std::move(rest);
                s1.insert(s1.end(), found.begin(), found.end());
                std::sort(s1.begin(), s1.end());
            }
            if (s1.size() > 1)
                d.nonseps.push_back(std::move(s1));
            else
                d.seps.emplace_back(s1.front(), kNaN);
        }
    } catch (const BudgetExhausted&) {
        d.exhausted = true;
        cover_leftovers(d, n);
    }
    d.fes_used = obj.fes_used() - before;
    return d;
}

}  // namespace lsgo
