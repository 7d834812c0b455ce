#include "lsgo/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <sstream>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "lsgo/baselines.hpp"
#include "lsgo/cc.hpp"
#include "lsgo/errors.hpp"
#include "lsgo/metrics.hpp"
#include "lsgo/objective.hpp"
#include "lsgo/svg.hpp"
#include "lsgo/textio.hpp"

namespace lsgo {

namespace {

std::string two_dec(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

double round_two_dec(double v) { return std::round(v * 100.0) / 100.0; }

std::string sci_two_dec(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2e", v);
    return buf;
}

}  // namespace

CampaignConfig parse_campaign_config(const std::string& text) {
    const KeyValueDoc doc = KeyValueDoc::parse(text);
    CampaignConfig cfg;
    if (doc.has("functions")) {
        cfg.functions.clear();
        for (const auto& s : doc.get_list("functions")) cfg.functions.push_back(std::stoi(s));
    }
    cfg.n = static_cast<int>(doc.get_int("n", cfg.n));
    cfg.m = static_cast<int>(doc.get_int("m", cfg.m));
    if (doc.has("seeds")) {
        cfg.seeds.clear();
        for (const auto& s : doc.get_list("seeds"))
            cfg.seeds.push_back(static_cast<std::uint64_t>(std::stoull(s)));
    }
    if (doc.has("algorithms")) cfg.algorithms = doc.get_list("algorithms");
    cfg.optimize = doc.get_bool("optimize", cfg.optimize);
    cfg.budget = doc.get_int("budget", cfg.budget);
    cfg.out_dir = doc.get_or("out", cfg.out_dir);
    cfg.format = doc.get_or("format", cfg.format);
    cfg.jobs = static_cast<int>(doc.get_int("jobs", cfg.jobs));
    cfg.seed_offset = static_cast<std::uint64_t>(doc.get_int("seed_offset", 0));
    cfg.timing = doc.get_bool("timing", cfg.timing);
    cfg.write_decompositions = doc.get_bool("write_decompositions", cfg.write_decompositions);
    cfg.write_histories = doc.get_bool("write_histories", cfg.write_histories);
    cfg.eta = doc.get_real("eta", cfg.eta);
    cfg.polish = doc.get_bool("polish", cfg.polish);
    if (doc.has("epsilon")) cfg.epsilon = doc.get_real("epsilon", 0.0);

    if (cfg.seeds.empty()) throw ConfigError("config: seeds must be nonempty");
    if (cfg.budget <= 0) throw ConfigError("config: budget must be positive");
    if (cfg.format != "csv" && cfg.format != "json")
        throw ConfigError("config: format must be csv or json");
    if (cfg.jobs < 1) throw ConfigError("config: jobs must be at least 1");
    for (const auto& a : cfg.algorithms)
        if (a != "svg" && a != "dg" && a != "rdg")
            throw ConfigError("config: unknown algorithm '" + a + "'");
    return cfg;
}

CampaignConfig load_campaign_config(const std::string& path) {
    return parse_campaign_config(read_file(path));
}

std::string default_config_text() {
    const CampaignConfig cfg;
    std::ostringstream out;
    out << "# campaign configuration (defaults)\n";
    out << "functions = ";
    for (std::size_t i = 0; i < cfg.functions.size(); ++i)
        out << (i ? "," : "") << cfg.functions[i];
    out << "\n";
    out << "n = " << cfg.n << "\n";
    out << "m = " << cfg.m << "\n";
    out << "seeds = ";
    for (std::size_t i = 0; i < cfg.seeds.size(); ++i) out << (i ? "," : "") << cfg.seeds[i];
    out << "\n";
    out << "algorithms = ";
    for (std::size_t i = 0; i < cfg.algorithms.size(); ++i)
        out << (i ? "," : "") << cfg.algorithms[i];
    out << "\n";
    out << "optimize = " << (cfg.optimize ? "true" : "false") << "\n";
    out << "budget = " << cfg.budget << "\n";
    out << "out = " << cfg.out_dir << "\n";
    out << "format = " << cfg.format << "\n";
    out << "jobs = " << cfg.jobs << "\n";
    out << "seed_offset = " << cfg.seed_offset << "\n";
    out << "timing = " << (cfg.timing ? "true" : "false") << "\n";
    out << "write_decompositions = " << (cfg.write_decompositions ? "true" : "false") << "\n";
    out << "write_histories = " << (cfg.write_histories ? "true" : "false") << "\n";
    out << "eta = " << format_double(cfg.eta) << "\n";
    out << "polish = " << (cfg.polish ? "true" : "false") << "\n";
    out << "# epsilon = <baseline threshold override>\n";
    return out.str();
}

namespace {

std::string row_file_stem(const ReportRow& row) {
    return "f" + std::to_string(row.function) + "_" + row.algorithm + "_s" +
           std::to_string(row.seed);
}

Decomposition decompose_with(const std::string& algorithm, CountingObjective& obj,
                             const CampaignConfig& cfg, std::uint64_t seed) {
    if (algorithm == "svg") {
        SvgConfig sc;
        sc.seed = seed;
        sc.eta = cfg.eta;
        sc.polish_separable = cfg.polish;
        return svg_decompose(obj, sc);
    }
    BaselineConfig bc;
    bc.epsilon = cfg.epsilon;
    if (algorithm == "dg") return dg_decompose(obj, bc);
    if (algorithm == "rdg") return rdg_decompose(obj, bc);
    throw ConfigError("unknown algorithm '" + algorithm + "'");
}

}  // namespace

ReportRow run_row(const CampaignConfig& cfg, int function, const std::string& algorithm,
                  std::uint64_t seed) {
    ReportRow row;
    row.function = function;
    row.algorithm = algorithm;
    row.seed = seed;
    row.n = cfg.n;
    row.m = cfg.m;

    const auto t0 = std::chrono::steady_clock::now();
    try {
        const BenchmarkProblem problem = build_problem(function, cfg.n, cfg.m, seed);
        CountingObjective obj = make_objective(problem, cfg.budget);
        const Decomposition d = decompose_with(algorithm, obj, cfg, seed);

        if (cfg.write_decompositions) {
            save_decomposition(d, cfg.out_dir + "/decomp_" + row_file_stem(row) + ".json");
        }

        if (cfg.optimize) {
            OptimizerConfig oc;
            oc.max_fes = cfg.budget;
            oc.seed = seed;
            const OptimizationResult opt = decc_optimize(
                obj, d, oc, [&problem](const vector_t& x) { return problem.evaluate_raw(x); });
            row.best_f = opt.best_f;
            row.fes = opt.fes_total;
            if (cfg.write_histories) {
                std::ostringstream hist;
                hist << "fes,best_f\n";
                for (const auto& [fes, bf] : opt.history)
                    hist << fes << ',' << format_double(bf) << '\n';
                write_file(cfg.out_dir + "/history_" + row_file_stem(row) + ".csv", hist.str());
            }
        } else {
            const GroundTruthDecomposition gt = problem.ground_truth();
            const RhoSplit rho = rho_split(gt, d, cfg.n);
            if (rho.rho1) row.rho1 = round_two_dec(*rho.rho1);
            if (rho.rho2) row.rho2 = round_two_dec(*rho.rho2);
            if (d.has_located_optima) row.dis_value = dis(d, problem);
            row.fes = d.fes_used;
        }
    } catch (const std::exception& e) {
        row.failed = true;
        row.error = e.what();
        row.rho1.reset();
        row.rho2.reset();
        row.fes.reset();
        row.dis_value.reset();
        row.best_f.reset();
    }
    if (cfg.timing) {
        const auto t1 = std::chrono::steady_clock::now();
        row.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    }
    return row;
}

std::vector<ReportRow> run_campaign(const CampaignConfig& cfg,
                                    const std::vector<ReportRow>& existing) {
    struct Key {
        int function;
        std::string algorithm;
        std::uint64_t seed;
        bool operator<(const Key& o) const {
            return std::tie(function, algorithm, seed) < std::tie(o.function, o.algorithm, o.seed);
        }
    };
    std::map<Key, const ReportRow*> done;
    for (const auto& r : existing) done[{r.function, r.algorithm, r.seed}] = &r;

    struct Task {
        int function;
        std::string algorithm;
        std::uint64_t seed;
        std::size_t slot;
    };
    std::vector<ReportRow> rows;
    std::vector<Task> tasks;
    for (int f : cfg.functions)
        for (const auto& a : cfg.algorithms)
            for (std::uint64_t s : cfg.seeds) {
                const std::uint64_t seed = s + cfg.seed_offset;
                auto it = done.find({f, a, seed});
                if (it != done.end()) {
                    rows.push_back(*it->second);
                } else {
                    rows.emplace_back();
                    tasks.push_back({f, a, seed, rows.size() - 1});
                }
            }

    const int workers = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(tasks.size())));
    if (workers <= 1) {
        for (const auto& t : tasks) rows[t.slot] = run_row(cfg, t.function, t.algorithm, t.seed);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                const std::size_t k = next.fetch_add(1);
                if (k >= tasks.size()) return;
                const Task& t = tasks[k];
                rows[t.slot] = run_row(cfg, t.function, t.algorithm, t.seed);
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return rows;
}

namespace {

std::string opt_int(const std::optional<long long>& v) {
    return v ? std::to_string(*v) : std::string();
}

}  // namespace

std::string rows_to_csv(const std::vector<ReportRow>& rows) {
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const auto& r : rows) {
        out << r.function << ',' << r.algorithm << ',' << r.seed << ',' << r.n << ',' << r.m << ','
            << (r.rho1 ? two_dec(*r.rho1) : "") << ',' << (r.rho2 ? two_dec(*r.rho2) : "") << ','
            << opt_int(r.fes) << ',' << (r.dis_value ? format_double(*r.dis_value) : "") << ','
            << (r.best_f ? format_double(*r.best_f) : "") << ',' << opt_int(r.wall_ms) << '\n';
    }
    return out.str();
}

std::string rows_to_json(const std::vector<ReportRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json j;
        j["function"] = r.function;
        j["algorithm"] = r.algorithm;
        j["seed"] = r.seed;
        j["n"] = r.n;
        j["m"] = r.m;
        j["rho1"] = r.rho1 ? nlohmann::json(*r.rho1) : nlohmann::json(nullptr);
        j["rho2"] = r.rho2 ? nlohmann::json(*r.rho2) : nlohmann::json(nullptr);
        j["fes"] = r.fes ? nlohmann::json(*r.fes) : nlohmann::json(nullptr);
        j["dis"] = r.dis_value ? nlohmann::json(*r.dis_value) : nlohmann::json(nullptr);
        j["best_f"] = r.best_f ? nlohmann::json(*r.best_f) : nlohmann::json(nullptr);
        j["wall_ms"] = r.wall_ms ? nlohmann::json(*r.wall_ms) : nlohmann::json(nullptr);
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

std::vector<ReportRow> rows_from_csv(const std::string& text) {
    std::vector<ReportRow> rows;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (first) {
            first = false;
            continue;  // header
        }
        if (trim(line).empty()) continue;
        std::vector<std::string> cells;
        std::string cur;
        for (char c : line) {
            if (c == ',') {
                cells.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        cells.push_back(cur);
        if (cells.size() != 11) throw ConfigError("rows csv: malformed line: " + line);
        ReportRow r;
        r.function = std::stoi(cells[0]);
        r.algorithm = cells[1];
        r.seed = std::stoull(cells[2]);
        r.n = std::stoi(cells[3]);
        r.m = std::stoi(cells[4]);
        if (!cells[5].empty()) r.rho1 = parse_double(cells[5]);
        if (!cells[6].empty()) r.rho2 = parse_double(cells[6]);
        if (!cells[7].empty()) r.fes = std::stoll(cells[7]);
        if (!cells[8].empty()) r.dis_value = parse_double(cells[8]);
        if (!cells[9].empty()) r.best_f = parse_double(cells[9]);
        if (!cells[10].empty()) r.wall_ms = std::stoll(cells[10]);
        r.failed = !r.fes.has_value();
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<ReportRow> rows_from_json(const std::string& text) {
    std::vector<ReportRow> rows;
    for (const auto& j : nlohmann::json::parse(text)) {
        ReportRow r;
        r.function = j.at("function").get<int>();
        r.algorithm = j.at("algorithm").get<std::string>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.n = j.at("n").get<int>();
        r.m = j.at("m").get<int>();
        if (!j.at("rho1").is_null()) r.rho1 = j["rho1"].get<double>();
        if (!j.at("rho2").is_null()) r.rho2 = j["rho2"].get<double>();
        if (!j.at("fes").is_null()) r.fes = j["fes"].get<long long>();
        if (!j.at("dis").is_null()) r.dis_value = j["dis"].get<double>();
        if (!j.at("best_f").is_null()) r.best_f = j["best_f"].get<double>();
        if (!j.at("wall_ms").is_null()) r.wall_ms = j["wall_ms"].get<long long>();
        r.failed = !r.fes.has_value();
        rows.push_back(std::move(r));
    }
    return rows;
}

namespace {

struct Stats {
    double median = 0.0, mean = 0.0, sdev = 0.0;
    std::size_t count = 0;
};

Stats stats_of(std::vector<double> v) {
    Stats s;
    s.count = v.size();
    if (v.empty()) return s;
    std::sort(v.begin(), v.end());
    const std::size_t h = v.size() / 2;
    s.median = (v.size() % 2) ? v[h] : 0.5 * (v[h - 1] + v[h]);
    double acc = 0.0;
    for (double x : v) acc += x;
    s.mean = acc / static_cast<double>(v.size());
    double var = 0.0;
    for (double x : v) var += (x - s.mean) * (x - s.mean);
    s.sdev = std::sqrt(var / static_cast<double>(v.size()));
    return s;
}

const char* kMetricNames[] = {"rho1", "rho2", "fes", "dis", "best_f", "wall_ms"};

std::vector<double> metric_values(const std::vector<ReportRow>& rows, int metric) {
    std::vector<double> v;
    for (const auto& r : rows) {
        switch (metric) {
            case 0: if (r.rho1) v.push_back(*r.rho1); break;
            case 1: if (r.rho2) v.push_back(*r.rho2); break;
            case 2: if (r.fes) v.push_back(static_cast<double>(*r.fes)); break;
            case 3: if (r.dis_value) v.push_back(*r.dis_value); break;
            case 4: if (r.best_f) v.push_back(*r.best_f); break;
            case 5: if (r.wall_ms) v.push_back(static_cast<double>(*r.wall_ms)); break;
        }
    }
    return v;
}

template <typename Emit>
void aggregate_rows(const std::vector<ReportRow>& rows, const Emit& emit) {
    std::map<std::pair<int, std::string>, std::vector<ReportRow>> cells;
    for (const auto& r : rows) cells[{r.function, r.algorithm}].push_back(r);
    for (const auto& [key, cell] : cells) emit(key.first, key.second, cell);
}

}  // namespace

std::string aggregate_report_csv(const std::vector<ReportRow>& rows) {
    if (rows.empty()) throw ConfigError("report: no rows to aggregate");
    std::ostringstream out;
    out << "function,algorithm,rows";
    for (const char* name : kMetricNames)
        out << ',' << name << "_median," << name << "_mean," << name << "_std";
    out << '\n';
    aggregate_rows(rows, [&](int function, const std::string& algorithm,
                             const std::vector<ReportRow>& cell) {
        out << function << ',' << algorithm << ',' << cell.size();
        for (int metric = 0; metric < 6; ++metric) {
            const Stats s = stats_of(metric_values(cell, metric));
            if (s.count == 0)
                out << ",,,";
            else
                out << ',' << sci_two_dec(s.median) << ',' << sci_two_dec(s.mean) << ','
                    << sci_two_dec(s.sdev);
        }
        out << '\n';
    });
    return out.str();
}

std::string aggregate_report_json(const std::vector<ReportRow>& rows) {
    if (rows.empty()) throw ConfigError("report: no rows to aggregate");
    nlohmann::json arr = nlohmann::json::array();
    aggregate_rows(rows, [&](int function, const std::string& algorithm,
                             const std::vector<ReportRow>& cell) {
        nlohmann::json j;
        j["function"] = function;
        j["algorithm"] = algorithm;
        j["rows"] = cell.size();
        for (int metric = 0; metric < 6; ++metric) {
            const Stats s = stats_of(metric_values(cell, metric));
            const std::string name = kMetricNames[metric];
            if (s.count == 0) {
                j[name + "_median"] = nullptr;
                j[name + "_mean"] = nullptr;
                j[name + "_std"] = nullptr;
            } else {
                j[name + "_median"] = parse_double(sci_two_dec(s.median));
                j[name + "_mean"] = parse_double(sci_two_dec(s.mean));
                j[name + "_std"] = parse_double(sci_two_dec(s.sdev));
            }
        }
        arr.push_back(std::move(j));
    });
    return arr.dump(2);
}

int run_and_write_campaign(const CampaignConfig& cfg) {
    namespace fs = std::filesystem;
    fs::create_directories(cfg.out_dir);
    const std::string rows_path = cfg.out_dir + "/rows." + cfg.format;

    std::vector<ReportRow> existing;
    if (fs::exists(rows_path)) {
        const std::string text = read_file(rows_path);
        existing = cfg.format == "csv" ? rows_from_csv(text) : rows_from_json(text);
    }

    const std::vector<ReportRow> rows = run_campaign(cfg, existing);
    write_file(rows_path, cfg.format == "csv" ? rows_to_csv(rows) : rows_to_json(rows));

    int ok = 0;
    for (const auto& r : rows)
        if (!r.failed) ++ok;
    return ok;
}

}  // namespace lsgo
