#include "lsgo/dbtg.hpp"

#include <algorithm>
#include <deque>

#include "lsgo/errors.hpp"

namespace lsgo {

DbtgResult dbtg(CountingObjective& obj, int t, const index_list& X_u, double x_t_star,
                double delta, const DetectionConfig& cfg, bool use_deduction) {
    DbtgResult res;
    if (X_u.empty()) return res;

    const long long before = obj.fes_used();
    auto detect = [&](const index_list& subset) {
        ++res.detections;
        return detect_sep(obj, t, subset, x_t_star, delta, cfg).is_sep;
    };

    std::deque<index_list> nodes;
    if (!detect(X_u)) nodes.push_back(X_u);

    while (!nodes.empty()) {
        index_list node = std::move(nodes.front());
        nodes.pop_front();
        if (node.size() == 1) {
            res.interacting.push_back(node.front());
            continue;
        }
        const std::size_t half = (node.size() + 1) / 2;
        index_list child1(node.begin(), node.begin() + half);
        index_list child2(node.begin() + half, node.end());

        const bool sep1 = detect(child1);
        if (!sep1) nodes.push_back(std::move(child1));

        bool sep2 = false;
        if (!sep1 || !use_deduction) sep2 = detect(child2);
        if (!sep2) nodes.push_back(std::move(child2));
    }

    std::sort(res.interacting.begin(), res.interacting.end());
    res.fes = obj.fes_used() - before;
    return res;
}

}  // namespace lsgo
