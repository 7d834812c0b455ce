#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lsgo/campaign.hpp"
#include "lsgo/errors.hpp"
#include "lsgo/textio.hpp"
#include "lsgo/verify.hpp"

namespace {

struct CommonFlags {
    std::string config_path;
    std::string out_dir;
    std::string format;
    int jobs = 0;
    long long seed_offset = -1;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "campaign config file")->required();
    cmd->add_option("--out", flags.out_dir, "output directory (overrides config)");
    cmd->add_option("--format", flags.format, "csv or json (overrides config)");
    cmd->add_option("--jobs", flags.jobs, "worker threads (overrides config)");
    cmd->add_option("--seed-offset", flags.seed_offset, "added to every seed (overrides config)");
}

lsgo::CampaignConfig resolve(const CommonFlags& flags, bool optimize) {
    lsgo::CampaignConfig cfg = lsgo::load_campaign_config(flags.config_path);
    cfg.optimize = optimize;
    if (!flags.out_dir.empty()) cfg.out_dir = flags.out_dir;
    if (!flags.format.empty()) cfg.format = flags.format;
    if (flags.jobs > 0) cfg.jobs = flags.jobs;
    if (flags.seed_offset >= 0) cfg.seed_offset = static_cast<std::uint64_t>(flags.seed_offset);
    return cfg;
}

int run_rows(const lsgo::CampaignConfig& cfg) {
    const int ok = lsgo::run_and_write_campaign(cfg);
    const int total = static_cast<int>(cfg.functions.size() * cfg.algorithms.size() *
                                       cfg.seeds.size());
    std::cerr << ok << "/" << total << " rows succeeded; results in " << cfg.out_dir << "/rows."
              << cfg.format << "\n";
    if (total > 0 && ok == 0) return 2;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decomposition and cooperative-coevolution campaign runner"};
    app.require_subcommand(1);

    CommonFlags dec_flags, opt_flags;
    auto* dec = app.add_subcommand("decompose", "run decomposition campaigns");
    add_common(dec, dec_flags);
    auto* opt = app.add_subcommand("optimize", "run decomposition + optimization campaigns");
    add_common(opt, opt_flags);

    std::string report_rows_path, report_out, report_format = "csv";
    auto* rep = app.add_subcommand("report", "aggregate raw rows into a summary table");
    rep->add_option("rows", report_rows_path, "rows.csv or rows.json produced by a campaign")
        ->required();
    rep->add_option("--out", report_out, "summary file (default: stdout)");
    rep->add_option("--format", report_format, "csv or json");

    auto* defaults = app.add_subcommand("defaults", "print the default campaign config");
    auto* verify = app.add_subcommand("verify", "run scaled self-checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (dec->parsed()) return run_rows(resolve(dec_flags, false));
        if (opt->parsed()) return run_rows(resolve(opt_flags, true));
        if (defaults->parsed()) {
            std::cout << lsgo::default_config_text();
            return 0;
        }
        if (rep->parsed()) {
            const std::string text = lsgo::read_file(report_rows_path);
            const auto rows = report_rows_path.size() > 5 &&
                                      report_rows_path.substr(report_rows_path.size() - 5) ==
                                          ".json"
                                  ? lsgo::rows_from_json(text)
                                  : lsgo::rows_from_csv(text);
            const std::string out = report_format == "json"
                                        ? lsgo::aggregate_report_json(rows)
                                        : lsgo::aggregate_report_csv(rows);
            if (report_out.empty())
                std::cout << out;
            else
                lsgo::write_file(report_out, out);
            return 0;
        }
        if (verify->parsed()) {
            bool all = true;
            for (const auto& c : lsgo::run_verify_checks()) {
                std::printf("%s %s (%s)\n", c.passed ? "PASS" : "FAIL", c.name.c_str(),
                            c.detail.c_str());
                all = all && c.passed;
            }
            return all ? 0 : 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
