#include "lsgo/verify.hpp"

#include <cmath>
#include <sstream>

#include "lsgo/dbtg.hpp"
#include "lsgo/detect.hpp"
#include "lsgo/metrics.hpp"
#include "lsgo/objective.hpp"
#include "lsgo/svg.hpp"
#include "lsgo/textio.hpp"

namespace lsgo {

namespace {

CheckResult check(const std::string& name, bool ok, const std::string& detail) {
    return {name, ok, detail};
}

// f(x) = (x1-x5)^2 + (x1-1)^2 + x2^2 + x3^2 + x4^2 on [-5,5]^5
CountingObjective chain_example() {
    auto fn = [](const vector_t& x) {
        const double a = x[0] - x[4];
        const double b = x[0] - 1.0;
        return a * a + b * b + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
    };
    return CountingObjective(fn, vector_t::Constant(5, -5.0), vector_t::Constant(5, 5.0));
}

CheckResult check_chain_grouping() {
    CountingObjective obj = chain_example();
    DetectionConfig cfg = default_detection_config(obj.lb(), obj.ub());
    // slice optimum of x1 given cv: (x1+5)^2 + (x1-1)^2 -> -2
    const double x1_star = -2.0;
    const DbtgResult with_ded = dbtg(obj, 0, {1, 2, 3, 4}, x1_star, 0.1, cfg, true);
    const DbtgResult without = dbtg(obj, 0, {1, 2, 3, 4}, x1_star, 0.1, cfg, false);
    const bool ok = with_ded.interacting == index_list{4} && with_ded.detections == 3 &&
                    with_ded.fes == 9 && without.detections == 5;
    std::ostringstream detail;
    detail << "detections " << with_ded.detections << " (vs " << without.detections
           << " undeduced), fes " << with_ded.fes;
    return check("five-variable chain grouping", ok, detail.str());
}

CheckResult check_criteria_separation() {
    auto ridge_fn = [](const vector_t& x) { return std::sqrt(x[0] * x[0] + x[1] * x[1]); };
    CountingObjective ridge(ridge_fn, vector_t::Constant(2, -100.0), vector_t::Constant(2, 100.0));
    DetectionConfig cfg = default_detection_config(ridge.lb(), ridge.ub());
    cfg.epsilon = 1e-10;
    const bool c1 = criterion1_separable(ridge, cfg, 0, 1, 0.0, 1.0, 0.0, 1.0);
    const bool c3 = detect_sep(ridge, 0, {1}, 0.0, 1e-3, cfg).is_sep;
    const bool ok = !c1 && c3;
    return check("ridge criteria separation", ok,
                 std::string("criterion1=") + (c1 ? "sep" : "nonsep") + " persistence=" +
                     (c3 ? "sep" : "nonsep"));
}

CheckResult check_metric_identities() {
    Partition p{{{0, 1}, {2}, {3, 4}}};
    Partition singletons{{{0}, {1}, {2}, {3}, {4}}};
    Partition whole{{{0, 1, 2, 3, 4}}};
    const double same = nmi(p, p, 5);
    const double zero = nmi(singletons, whole, 5);
    const bool ok = std::abs(same - 100.0) < 1e-9 && std::abs(zero) < 1e-9;
    return check("partition-consistency identities", ok,
                 "nmi(D,D)=" + format_double(same) + " nmi(singletons,whole)=" + format_double(zero));
}

CheckResult check_separable_decomposition() {
    const int n = 50;
    const BenchmarkProblem p = build_problem(1, n, 10, 12345);
    CountingObjective obj = make_objective(p);
    SvgConfig sc;
    sc.seed = 12345;
    const Decomposition d = svg_decompose(obj, sc);
    const RhoSplit rho = rho_split(p.ground_truth(), d, n);
    const bool rho_ok = rho.rho1 && *rho.rho1 > 100.0 - 1e-6;
    const double per_var = static_cast<double>(d.fes_used) / n;
    const bool fes_ok = per_var >= 190.0 && per_var <= 280.0;
    std::ostringstream detail;
    detail << "rho1=" << (rho.rho1 ? format_double(*rho.rho1) : "-") << " fes/var=" << per_var;
    return check("fully separable decomposition", rho_ok && fes_ok, detail.str());
}

}  // namespace

std::vector<CheckResult> run_verify_checks() {
    std::vector<CheckResult> out;
    out.push_back(check_chain_grouping());
    out.push_back(check_criteria_separation());
    out.push_back(check_metric_identities());
    out.push_back(check_separable_decomposition());
    return out;
}

}  // namespace lsgo
