#include "lsgo/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "lsgo/errors.hpp"

namespace lsgo {

Partition to_partition(const GroundTruthDecomposition& gt) {
    Partition p;
    for (int i : gt.separable) p.groups.push_back({i});
    for (const auto& g : gt.groups) p.groups.push_back(g);
    return p;
}

Partition to_partition(const Decomposition& d) {
    Partition p;
    for (const auto& [i, v] : d.seps) p.groups.push_back({i});
    for (const auto& g : d.nonseps) p.groups.push_back(g);
    return p;
}

namespace {

// group label per element; throws unless the partition covers 0..n-1 exactly
std::vector<int> labels_of(const Partition& p, int n) {
    std::vector<int> label(n, -1);
    int id = 0;
    for (const auto& g : p.groups) {
        if (g.empty()) throw DomainError("nmi: empty group");
        for (int i : g) {
            if (i < 0 || i >= n || label[i] != -1)
                throw DomainError("nmi: partitions must cover the same universe exactly");
            label[i] = id;
        }
        ++id;
    }
    if (std::any_of(label.begin(), label.end(), [](int l) { return l < 0; }))
        throw DomainError("nmi: partition does not cover the universe");
    return label;
}

}  // namespace

double nmi(const Partition& a, const Partition& b, int n) {
    if (n <= 0) throw DomainError("nmi: empty universe");
    const auto la = labels_of(a, n);
    const auto lb = labels_of(b, n);

    std::vector<double> sa(a.groups.size(), 0.0), sb(b.groups.size(), 0.0);
    std::map<std::pair<int, int>, double> confusion;
    for (int i = 0; i < n; ++i) {
        sa[la[i]] += 1.0;
        sb[lb[i]] += 1.0;
        confusion[{la[i], lb[i]}] += 1.0;
    }

    const double dn = static_cast<double>(n);
    double numerator = 0.0;
    for (const auto& [cell, count] : confusion)
        numerator += count * std::log2(dn * count / (sa[cell.first] * sb[cell.second]));
    numerator *= -2.0;

    double denominator = 0.0;
    for (double v : sa) denominator += v * std::log2(v / dn);
    for (double v : sb) denominator += v * std::log2(v / dn);

    if (denominator == 0.0) return 100.0;  // both trivial, hence identical
    const double ratio = numerator / denominator;
    return std::clamp(ratio, 0.0, 1.0) * 100.0;
}

namespace {

// Restrict a partition to `keep` (remapping indices by rank) and drop empties.
Partition restrict_partition(const Partition& p, const index_list& keep) {
    std::map<int, int> rank;
    for (std::size_t i = 0; i < keep.size(); ++i) rank[keep[i]] = static_cast<int>(i);
    Partition out;
    for (const auto& g : p.groups) {
        index_list r;
        for (int i : g) {
            auto it = rank.find(i);
            if (it != rank.end()) r.push_back(it->second);
        }
        if (!r.empty()) out.groups.push_back(std::move(r));
    }
    return out;
}

}  // namespace

RhoSplit rho_split(const GroundTruthDecomposition& gt, const Decomposition& result, int n) {
    if (!result.covers_exactly(n))
        throw DomainError("rho_split: decomposition does not cover the problem universe");
    RhoSplit out;
    const Partition produced = to_partition(result);

    if (!gt.separable.empty()) {
        index_list keep = gt.separable;
        std::sort(keep.begin(), keep.end());
        Partition ideal;
        for (std::size_t i = 0; i < keep.size(); ++i)
            ideal.groups.push_back({static_cast<int>(i)});
        out.rho1 = nmi(ideal, restrict_partition(produced, keep), static_cast<int>(keep.size()));
    }

    index_list nonsep_vars;
    for (const auto& g : gt.groups) nonsep_vars.insert(nonsep_vars.end(), g.begin(), g.end());
    if (!nonsep_vars.empty()) {
        std::sort(nonsep_vars.begin(), nonsep_vars.end());
        Partition ideal = restrict_partition(to_partition(gt), nonsep_vars);
        out.rho2 = nmi(ideal, restrict_partition(produced, nonsep_vars),
                       static_cast<int>(nonsep_vars.size()));
    }
    return out;
}

double dis(const Decomposition& result, const BenchmarkProblem& problem) {
    double acc = 0.0;
    for (const auto& [i, v] : result.seps) {
        const double diff = result.cv[i] - problem.o[i];
        acc += diff * diff;
    }
    return std::sqrt(acc);
}

}  // namespace lsgo
