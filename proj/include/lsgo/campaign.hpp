#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lsgo/types.hpp"

namespace lsgo {

struct CampaignConfig {
    std::vector<int> functions{1};
    int n = 100;
    int m = 10;
    std::vector<std::uint64_t> seeds{1};
    std::vector<std::string> algorithms{"svg"};  // svg | dg | rdg
    bool optimize = false;
    long long budget = 3'000'000;
    std::string out_dir = "campaign_out";
    std::string format = "csv";  // csv | json
    int jobs = 1;
    std::uint64_t seed_offset = 0;
    bool timing = false;              // fill wall_ms (breaks byte-for-byte reproducibility)
    bool write_decompositions = false;
    bool write_histories = true;      // optimize campaigns: per-row convergence CSV
    // algorithm knobs
    double eta = 1e-13;
    bool polish = true;
    std::optional<double> epsilon;    // baseline threshold override
};

CampaignConfig parse_campaign_config(const std::string& text);
CampaignConfig load_campaign_config(const std::string& path);
std::string default_config_text();

struct ReportRow {
    int function = 0;
    std::string algorithm;
    std::uint64_t seed = 0;
    int n = 0;
    int m = 0;
    std::optional<double> rho1, rho2;
    std::optional<long long> fes;
    std::optional<double> dis_value, best_f;
    std::optional<long long> wall_ms;
    bool failed = false;
    std::string error;  // goes to the log, not the table
};

// Executes one row; never throws (failures are encoded in the row).
ReportRow run_row(const CampaignConfig& cfg, int function, const std::string& algorithm,
                  std::uint64_t seed);

// All (function, algorithm, seed) rows, worker-pool parallel, stable order.
// Rows whose keys already appear in `existing` are carried over untouched.
std::vector<ReportRow> run_campaign(const CampaignConfig& cfg,
                                    const std::vector<ReportRow>& existing = {});

inline const char* kCsvHeader = "function,algorithm,seed,n,m,rho1,rho2,fes,dis,best_f,wall_ms";

std::string rows_to_csv(const std::vector<ReportRow>& rows);
std::string rows_to_json(const std::vector<ReportRow>& rows);
std::vector<ReportRow> rows_from_csv(const std::string& text);
std::vector<ReportRow> rows_from_json(const std::string& text);

// Median/mean/std per (function, algorithm) over the metric columns,
// scientific notation with two decimals.
std::string aggregate_report_csv(const std::vector<ReportRow>& rows);
std::string aggregate_report_json(const std::vector<ReportRow>& rows);

// Returns the number of successful rows; writes report files into cfg.out_dir.
int run_and_write_campaign(const CampaignConfig& cfg);

}  // namespace lsgo
