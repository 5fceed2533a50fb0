#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "varloc/core.hpp"

namespace varloc::bench {

struct BenchConfig {
  int M = 10;
  std::vector<int> L_values = {0, 1, 2, 3, 4, 5};
  double sigma_inlier = 0.05;  // km
  std::vector<double> sigma_outlier_grid = {0.5, 0.75, 1.0, 1.5, 2.0, 2.5};
  int n_placements = 20;
  int n_outlier_lists = 10;
  int grid_G = 20;
  std::uint64_t seed = 1;
  std::vector<std::string> methods = {"rpte", "srls", "gd"};
};

/// Throws ConfigError on violation.
void validate(const BenchConfig& cfg);

struct GeneratedScenario {
  Scenario scenario;
  Point2 truth;
  std::vector<int> outlier_list;  // length M/2; the first L entries are outliers
};

/// Anchors and target are drawn once per placement; the outlier list and the
/// standard-normal noise vector once per (placement, list). Measurements are
/// |range + sigma_m * z_m| with sigma_m = sigma_outlier for the first L list
/// entries and sigma_inlier otherwise.
GeneratedScenario generate_scenario(const BenchConfig& cfg, int placement, int list, int L,
                                    double sigma_outlier);

struct TrialRecord {
  int placement = 0;
  int list = 0;
  int L = 0;
  double sigma_outlier = 0.0;  // km
  std::string method;
  Point2 estimate;
  double error_m = 0.0;
  double wall_time_s = 0.0;
  bool ok = true;
  std::string failure;
};

/// Runs one method by name ("rpte", "srls", "gd"). Throws DomainError on an
/// unknown name.
Estimate run_method(const std::string& method, const Scenario& s, int grid_G);

bool is_known_method(const std::string& method);

/// Every (placement, list, L, sigma_O, method) cell, in that nesting order.
/// Method failures become records with ok == false.
std::vector<TrialRecord> run_monte_carlo(const BenchConfig& cfg, unsigned threads = 0);

struct SummaryRow {
  int L = 0;
  double sigma_outlier = 0.0;
  std::string method;
  int n = 0;
  int failed = 0;
  double mean_error_m = 0.0;
};

/// Mean error per (L, sigma_O, method) over successful trials, in first-seen order.
std::vector<SummaryRow> summarize(const std::vector<TrialRecord>& records);

inline constexpr const char* kTrialsHeader =
    "placement,list,L,sigma_o_km,method,x_km,y_km,error_m,time_s";
inline constexpr const char* kSummaryHeader = "L,sigma_o_km,method,n,failed,mean_error_m";

std::string format_trials_csv(const std::vector<TrialRecord>& records);
std::string format_summary_csv(const std::vector<SummaryRow>& rows);

/// Writes trials.csv and summary.csv into dir (created if missing).
/// Throws IoError if the files cannot be written.
void emit_report(const std::vector<TrialRecord>& records, const std::filesystem::path& dir);

}  // namespace varloc::bench
