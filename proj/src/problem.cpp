#include "lsgo/problem.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "lsgo/errors.hpp"
#include "lsgo/rotation.hpp"
#include "lsgo/textio.hpp"

namespace lsgo {

namespace {

BaseFunction kind_of_family(int func_id) {
    switch (func_id) {
        case 1: case 6: case 11: case 16: return BaseFunction::elliptic;
        case 2: case 7: case 12: case 17: return BaseFunction::rastrigin;
        case 3: case 8: case 13: case 18: return BaseFunction::exponential;
        case 4: case 9: case 14: case 19: return BaseFunction::ackley;
        case 5: return BaseFunction::ridge;
        default: return BaseFunction::schwefel;  // 10, 15, 20, 21 resolved by caller
    }
}

void attach_weights(Component& c) {
    if (c.kind == BaseFunction::elliptic)
        c.weights = elliptic_weights(c.size);
    else if (c.kind == BaseFunction::exponential)
        c.weights = exponential_weights(c.size);
}

double eval_component(const Component& c, const vector_t& y) {
    switch (c.kind) {
        case BaseFunction::elliptic: return elliptic(y, c.weights);
        case BaseFunction::rastrigin: return rastrigin(y);
        case BaseFunction::exponential: return exponential(y, c.weights);
        case BaseFunction::ackley: return ackley(y);
        case BaseFunction::ridge: return ridge(y);
        case BaseFunction::schwefel: return schwefel(y);
    }
    return 0.0;
}

}  // namespace

double BenchmarkProblem::evaluate_raw(const vector_t& x) const {
    const vector_t z = x - o;
    double acc = 0.0;
    for (const auto& c : components) {
        const auto seg = z.segment(c.start, c.size);
        if (c.rotation) {
            const vector_t y = (*c.rotation) * seg;
            acc += eval_component(c, y);
        } else {
            acc += eval_component(c, seg);
        }
    }
    return acc;
}

GroundTruthDecomposition BenchmarkProblem::ground_truth() const {
    GroundTruthDecomposition gt;
    for (const auto& c : components) {
        if (c.nonseparable()) {
            index_list g(c.size);
            for (int i = 0; i < c.size; ++i) g[i] = c.start + i;
            gt.groups.push_back(std::move(g));
        } else {
            for (int i = 0; i < c.size; ++i) gt.separable.push_back(c.start + i);
        }
    }
    std::sort(gt.separable.begin(), gt.separable.end());
    return gt;
}

BenchmarkProblem build_problem(int func_id, int n, int m, std::uint64_t seed) {
    if (func_id < 1 || func_id > 21) throw ConfigError("func_id must be in 1..21");
    if (n < 1) throw ConfigError("dimension must be positive");

    BenchmarkProblem p;
    p.func_id = func_id;
    p.n = n;
    p.m = m;
    p.seed = seed;

    auto rotated = [&](int start, BaseFunction kind, int component_index) {
        Component c;
        c.start = start;
        c.size = m;
        c.kind = kind;
        c.rotation = make_rotation(m, derive_seed(seed, 100 + component_index));
        attach_weights(c);
        return c;
    };
    auto plain = [&](int start, int size, BaseFunction kind) {
        Component c;
        c.start = start;
        c.size = size;
        c.kind = kind;
        attach_weights(c);
        return c;
    };

    if (func_id <= 5) {
        p.components.push_back(plain(0, n, kind_of_family(func_id)));
    } else if (func_id <= 10) {
        if (m < 2 || m >= n) throw ConfigError("f6-f10 need 2 <= m < n");
        if (func_id == 10) {
            p.components.push_back(plain(0, m, BaseFunction::schwefel));
            p.components.push_back(plain(m, n - m, BaseFunction::ridge));
        } else {
            const BaseFunction kind = kind_of_family(func_id);
            p.components.push_back(rotated(0, kind, 0));
            p.components.push_back(plain(m, n - m, kind));
        }
    } else if (func_id <= 15) {
        if (m < 2 || n % (2 * m) != 0) throw ConfigError("f11-f15 need n divisible by 2m");
        const int k = n / (2 * m);
        if (func_id == 15) {
            for (int i = 0; i < k; ++i)
                p.components.push_back(plain(i * m, m, BaseFunction::schwefel));
            p.components.push_back(plain(n / 2, n / 2, BaseFunction::ridge));
        } else {
            const BaseFunction kind = kind_of_family(func_id);
            for (int i = 0; i < k; ++i) p.components.push_back(rotated(i * m, kind, i));
            p.components.push_back(plain(n / 2, n / 2, kind));
        }
    } else if (func_id <= 20) {
        if (m < 2 || n % m != 0) throw ConfigError("f16-f20 need n divisible by m");
        const int k = n / m;
        if (func_id == 20) {
            for (int i = 0; i < k; ++i)
                p.components.push_back(plain(i * m, m, BaseFunction::schwefel));
        } else {
            const BaseFunction kind = kind_of_family(func_id);
            for (int i = 0; i < k; ++i) p.components.push_back(rotated(i * m, kind, i));
        }
    } else {
        if (n < 2) throw ConfigError("f21 needs n >= 2");
        p.components.push_back(plain(0, n, BaseFunction::schwefel));
    }

    p.lb.resize(n);
    p.ub.resize(n);
    for (const auto& c : p.components) {
        const Interval dom = domain_of(c.kind);
        for (int i = 0; i < c.size; ++i) {
            p.lb[c.start + i] = dom.lo;
            p.ub[c.start + i] = dom.hi;
        }
    }

    // Translation drawn away from the box faces so every coordinate of the
    // optimum has room on both sides.
    Rng rng(derive_seed(seed, 1));
    p.o.resize(n);
    for (int i = 0; i < n; ++i) {
        const double margin = 0.1 * (p.ub[i] - p.lb[i]);
        p.o[i] = rng.uniform(p.lb[i] + margin, p.ub[i] - margin);
    }
    return p;
}

std::string problem_spec_text(const BenchmarkProblem& p, bool embed_payloads) {
    std::ostringstream out;
    out << "func_id = " << p.func_id << "\n";
    out << "n = " << p.n << "\n";
    out << "m = " << p.m << "\n";
    out << "seed = " << p.seed << "\n";
    if (embed_payloads) {
        out << "o = " << format_vector(p.o) << "\n";
        int idx = 0;
        for (const auto& c : p.components) {
            if (c.rotation) {
                const auto& r = *c.rotation;
                vector_t flat(r.size());
                for (Eigen::Index row = 0; row < r.rows(); ++row)
                    for (Eigen::Index col = 0; col < r.cols(); ++col)
                        flat[row * r.cols() + col] = r(row, col);
                out << "rotation." << idx << " = " << format_vector(flat) << "\n";
            }
            ++idx;
        }
    }
    return out.str();
}

void save_problem_spec(const BenchmarkProblem& p, const std::string& path, bool embed_payloads) {
    write_file(path, problem_spec_text(p, embed_payloads));
}

BenchmarkProblem parse_problem_spec(const std::string& text) {
    const KeyValueDoc doc = KeyValueDoc::parse(text);
    const int func_id = static_cast<int>(doc.get_int("func_id", 0));
    const int n = static_cast<int>(doc.get_int("n", 0));
    const int m = static_cast<int>(doc.get_int("m", 0));
    const auto seed = static_cast<std::uint64_t>(doc.get_int("seed", 0));
    BenchmarkProblem p = build_problem(func_id, n, m, seed);
    if (doc.has("o")) {
        vector_t o = parse_vector(doc.get("o"));
        if (o.size() != p.n) throw ConfigError("problem spec: o has wrong length");
        p.o = std::move(o);
    }
    for (std::size_t idx = 0; idx < p.components.size(); ++idx) {
        const std::string key = "rotation." + std::to_string(idx);
        if (!doc.has(key)) continue;
        auto& c = p.components[idx];
        if (!c.rotation) throw ConfigError("problem spec: component " + std::to_string(idx) + " is unrotated");
        const vector_t flat = parse_vector(doc.get(key));
        if (flat.size() != static_cast<Eigen::Index>(c.size) * c.size)
            throw ConfigError("problem spec: rotation payload has wrong size");
        matrix_t r(c.size, c.size);
        for (int row = 0; row < c.size; ++row)
            for (int col = 0; col < c.size; ++col) r(row, col) = flat[row * c.size + col];
        if (orthogonality_defect(r) > 1e-10) throw ConfigError("problem spec: rotation is not orthogonal");
        c.rotation = std::move(r);
    }
    return p;
}

BenchmarkProblem load_problem_spec(const std::string& path) {
    return parse_problem_spec(read_file(path));
}

std::string ground_truth_json(const GroundTruthDecomposition& gt) {
    nlohmann::json j;
    j["separable"] = gt.separable;
    j["groups"] = gt.groups;
    return j.dump(2);
}

}  // namespace lsgo
