#include "lsgo/cc.hpp"

#include <algorithm>
#include <cmath>

#include "lsgo/errors.hpp"

namespace lsgo {

double evaluate_subsolution(CountingObjective& obj, const vector_t& cv, const index_list& group,
                            const vector_t& sub) {
    if (static_cast<Eigen::Index>(group.size()) != sub.size())
        throw DomainError("evaluate_subsolution: sub-solution length mismatch");
    vector_t full = cv;
    for (std::size_t k = 0; k < group.size(); ++k) full[group[k]] = sub[k];
    return obj(full);
}

bool de_generation(Subpopulation& pop, const vector_t& cv, CountingObjective& obj,
                   const OptimizerConfig& cfg, Rng& rng) {
    const int np = static_cast<int>(pop.individuals.cols());
    const int dims = static_cast<int>(pop.group.size());

    vector_t trial(dims);
    for (int i = 0; i < np; ++i) {
        if (!obj.can_spend(1)) return false;

        int r1 = rng.below(np);
        while (r1 == i) r1 = rng.below(np);
        int r2 = rng.below(np);
        while (r2 == i || r2 == r1) r2 = rng.below(np);
        int r3 = rng.below(np);
        while (r3 == i || r3 == r1 || r3 == r2) r3 = rng.below(np);

        const double f = cfg.self_adaptive
                             ? std::clamp(rng.normal(cfg.f_mean, cfg.f_sdev), 0.05, 1.0)
                             : cfg.f_mean;
        const double cr = cfg.self_adaptive
                              ? std::clamp(rng.normal(cfg.cr_mean, cfg.cr_sdev), 0.0, 1.0)
                              : cfg.cr_mean;
        const int jrand = rng.below(dims);

        for (int k = 0; k < dims; ++k) {
            if (k == jrand || rng.uniform01() < cr) {
                double v = pop.individuals(k, r1) +
                           f * (pop.individuals(k, r2) - pop.individuals(k, r3));
                const int var = pop.group[k];
                trial[k] = std::clamp(v, obj.lb()[var], obj.ub()[var]);
            } else {
                trial[k] = pop.individuals(k, i);
            }
        }

        const double ft = evaluate_subsolution(obj, cv, pop.group, trial);
        if (ft <= pop.fitness[i]) {
            pop.individuals.col(i) = trial;
            pop.fitness[i] = ft;
        }
    }
    return true;
}

namespace {

Subpopulation make_subpopulation(const index_list& group, const vector_t& cv,
                                 const CountingObjective& obj, const OptimizerConfig& cfg,
                                 Rng& rng) {
    Subpopulation sp;
    sp.group = group;
    const int dims = static_cast<int>(group.size());
    const int np = std::max(4, std::min(cfg.population_cap, cfg.population_per_dim * dims));
    sp.individuals.resize(dims, np);
    sp.fitness = vector_t::Constant(np, std::numeric_limits<double>::infinity());
    for (int k = 0; k < dims; ++k) {
        const int var = group[k];
        // the context slice rides along as the first member, clamped into the box
        sp.individuals(k, 0) = std::clamp(cv[var], obj.lb()[var], obj.ub()[var]);
        for (int i = 1; i < np; ++i)
            sp.individuals(k, i) = rng.uniform(obj.lb()[var], obj.ub()[var]);
    }
    return sp;
}

}  // namespace

OptimizationResult decc_optimize(CountingObjective& obj, const Decomposition& decomposition,
                                 const OptimizerConfig& cfg, const objective_fn& audit) {
    OptimizationResult out;
    vector_t cv = decomposition.cv;

    std::vector<index_list> groups = decomposition.nonseps;
    if (!decomposition.has_located_optima && !decomposition.seps.empty()) {
        // no per-variable optima to inherit: optimize the separable block too
        groups.push_back(decomposition.separable_indices());
    }

    double f_cv = audit(cv);
    out.history.emplace_back(obj.fes_used(), f_cv);
    if (groups.empty()) {
        out.best = cv;
        out.best_f = f_cv;
        out.fes_total = obj.fes_used();
        return out;
    }

    Rng rng(derive_seed(cfg.seed, 11));
    std::vector<Subpopulation> pops;
    pops.reserve(groups.size());
    for (const auto& g : groups) pops.push_back(make_subpopulation(g, cv, obj, cfg, rng));

    long long cv_version = 0;
    bool exhausted = false;
    while (!exhausted) {
        bool spent = false;
        for (auto& sp : pops) {
            if (sp.eval_stamp != cv_version) {
                const int np = static_cast<int>(sp.individuals.cols());
                int i = 0;
                for (; i < np && obj.can_spend(1); ++i)
                    sp.fitness[i] = evaluate_subsolution(obj, cv, sp.group, sp.individuals.col(i));
                if (i < np) {
                    exhausted = true;
                    break;
                }
                sp.eval_stamp = cv_version;
                spent = true;
            }
            for (int gen = 0; gen < cfg.generations_per_turn; ++gen) {
                if (!de_generation(sp, cv, obj, cfg, rng)) {
                    exhausted = true;
                    break;
                }
                spent = true;
            }

            Eigen::Index best_i = 0;
            const double best_fit = sp.fitness.minCoeff(&best_i);
            if (std::isfinite(best_fit) && best_fit <= f_cv) {
                for (std::size_t k = 0; k < sp.group.size(); ++k)
                    cv[sp.group[k]] = sp.individuals(static_cast<Eigen::Index>(k), best_i);
                f_cv = best_fit;
                ++cv_version;
                sp.eval_stamp = cv_version;  // inserting its own slice leaves its fitnesses valid
            }
            out.history.emplace_back(obj.fes_used(), f_cv);
            if (exhausted) break;
        }
        if (!spent) break;
    }

    out.best = cv;
    out.best_f = f_cv;
    out.fes_total = obj.fes_used();
    return out;
}

}  // namespace lsgo
