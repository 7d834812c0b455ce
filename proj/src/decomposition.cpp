#include "lsgo/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "lsgo/errors.hpp"
#include "lsgo/textio.hpp"

namespace lsgo {

index_list Decomposition::separable_indices() const {
    index_list out;
    out.reserve(seps.size());
    for (const auto& [i, v] : seps) out.push_back(i);
    return out;
}

bool Decomposition::covers_exactly(int n) const {
    std::vector<int> count(n, 0);
    auto tally = [&](int i) {
        if (i < 0 || i >= n) return false;
        ++count[i];
        return true;
    };
    for (const auto& [i, v] : seps)
        if (!tally(i)) return false;
    for (const auto& g : nonseps)
        for (int i : g)
            if (!tally(i)) return false;
    return std::all_of(count.begin(), count.end(), [](int c) { return c == 1; });
}

std::string decomposition_to_json(const Decomposition& d) {
    nlohmann::json j;
    auto& seps = j["seps"] = nlohmann::json::array();
    for (const auto& [i, v] : d.seps) {
        if (std::isnan(v))
            seps.push_back({i, nullptr});
        else
            seps.push_back({i, v});
    }
    j["nonseps"] = d.nonseps;
    j["fes_used"] = d.fes_used;
    j["exhausted"] = d.exhausted;
    j["has_located_optima"] = d.has_located_optima;
    std::vector<double> cv(d.cv.data(), d.cv.data() + d.cv.size());
    j["cv"] = cv;
    j["cv_digest"] = vector_digest(d.cv);
    return j.dump(2);
}

Decomposition decomposition_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    Decomposition d;
    for (const auto& e : j.at("seps")) {
        const int i = e.at(0).get<int>();
        const double v =
            e.at(1).is_null() ? std::numeric_limits<double>::quiet_NaN() : e.at(1).get<double>();
        d.seps.emplace_back(i, v);
    }
    d.nonseps = j.at("nonseps").get<std::vector<index_list>>();
    d.fes_used = j.at("fes_used").get<long long>();
    d.exhausted = j.value("exhausted", false);
    d.has_located_optima = j.value("has_located_optima", true);
    const auto cv = j.at("cv").get<std::vector<double>>();
    d.cv.resize(static_cast<Eigen::Index>(cv.size()));
    for (std::size_t i = 0; i < cv.size(); ++i) d.cv[static_cast<Eigen::Index>(i)] = cv[i];
    if (j.contains("cv_digest") && j["cv_digest"].get<std::string>() != vector_digest(d.cv))
        throw DomainError("decomposition: context vector digest mismatch");
    return d;
}

void save_decomposition(const Decomposition& d, const std::string& path) {
    write_file(path, decomposition_to_json(d));
}

Decomposition load_decomposition(const std::string& path) {
    return decomposition_from_json(read_file(path));
}

}  // namespace lsgo
