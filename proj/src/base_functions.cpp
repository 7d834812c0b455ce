#include "lsgo/base_functions.hpp"

#include <string>

namespace lsgo {

const char* to_string(BaseFunction kind) {
    switch (kind) {
        case BaseFunction::elliptic: return "elliptic";
        case BaseFunction::rastrigin: return "rastrigin";
        case BaseFunction::exponential: return "exponential";
        case BaseFunction::ackley: return "ackley";
        case BaseFunction::ridge: return "ridge";
        case BaseFunction::schwefel: return "schwefel";
    }
    return "?";
}

BaseFunction base_function_from_string(std::string_view name) {
    if (name == "elliptic") return BaseFunction::elliptic;
    if (name == "rastrigin") return BaseFunction::rastrigin;
    if (name == "exponential") return BaseFunction::exponential;
    if (name == "ackley") return BaseFunction::ackley;
    if (name == "ridge") return BaseFunction::ridge;
    if (name == "schwefel") return BaseFunction::schwefel;
    throw ConfigError("unknown base function: " + std::string(name));
}

vector_t elliptic_weights(Eigen::Index n) {
    vector_t w(n);
    if (n == 1) {
        w[0] = 1.0;
        return w;
    }
    for (Eigen::Index i = 0; i < n; ++i)
        w[i] = std::pow(1e6, static_cast<double>(i) / static_cast<double>(n - 1));
    return w;
}

vector_t exponential_weights(Eigen::Index n) {
    vector_t w(n);
    for (Eigen::Index i = 0; i < n; ++i)
        w[i] = static_cast<double>(i + 1) / static_cast<double>(n);
    return w;
}

double eval_base(BaseFunction kind, const vector_t& x) {
    if (x.size() == 0) throw DomainError("eval_base: empty input vector");
    if (!x.allFinite()) throw DomainError("eval_base: non-finite input");
    switch (kind) {
        case BaseFunction::elliptic: return elliptic(x);
        case BaseFunction::rastrigin: return rastrigin(x);
        case BaseFunction::exponential: return exponential(x);
        case BaseFunction::ackley: return ackley(x);
        case BaseFunction::ridge: return ridge(x);
        case BaseFunction::schwefel: return schwefel(x);
    }
    throw DomainError("eval_base: unknown kind");
}

}  // namespace lsgo
