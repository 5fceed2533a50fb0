// varloc: robust range-based 2D localization with a known outlier count.
//
//   varloc solve scenario.json [--method rpte|srls|gd] [--grid G] [--oracle h]
//                              [--candidates out.csv]
//   varloc bench --config cfg.json --out DIR [--threads N]
//   varloc isa

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "varloc/baselines.hpp"
#include "varloc/bench.hpp"
#include "varloc/errors.hpp"
#include "varloc/io.hpp"
#include "varloc/kernels.hpp"
#include "varloc/solver.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

int run_solve(const std::string& path, const std::string& method, int grid, double oracle_h,
              const std::string& candidates_path) {
  const varloc::Scenario s = varloc::io::load_scenario(path);
  const varloc::Estimate e = varloc::bench::run_method(method, s, grid);
  nlohmann::json out = varloc::io::estimate_to_json(e);

  if (!candidates_path.empty()) {
    const auto candidates = varloc::discretize(varloc::build_majorizer(s), grid);
    std::ofstream f(candidates_path, std::ios::binary);
    if (!f) throw varloc::IoError("cannot write " + candidates_path);
    f << varloc::io::format_candidates_csv(candidates);
  }
  if (oracle_h > 0.0) {
    const varloc::Estimate o = varloc::oracle_grid(s, oracle_h);
    out["oracle"] = varloc::io::estimate_to_json(o);
    out["oracle_gap_km"] = e.objective - o.objective;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_bench(const std::string& config_path, const std::string& out_dir, unsigned threads) {
  varloc::bench::BenchConfig cfg;
  try {
    cfg = varloc::io::load_bench_config(config_path);
    if (const char* env = std::getenv("VARLOC_SEED")) {
      char* end = nullptr;
      const unsigned long long seed = std::strtoull(env, &end, 10);
      if (end == env || *end != '\0') throw varloc::ConfigError("VARLOC_SEED is not an integer");
      cfg.seed = seed;
    }
  } catch (const varloc::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  const auto records = varloc::bench::run_monte_carlo(cfg, threads);
  varloc::bench::emit_report(records, out_dir);

  std::printf("%-4s %-10s %-6s %6s %7s %14s\n", "L", "sigma_o_km", "method", "n", "failed",
              "mean_error_m");
  for (const auto& row : varloc::bench::summarize(records)) {
    std::printf("%-4d %-10g %-6s %6d %7d %14.3f\n", row.L, row.sigma_outlier, row.method.c_str(),
                row.n, row.failed, row.mean_error_m);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust range-based 2D target localization"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "Estimate the target of one scenario");
  std::string scenario_path;
  std::string method = "rpte";
  int grid = varloc::kDefaultGrid;
  double oracle_h = 0.0;
  std::string candidates_path;
  solve->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  solve->add_option("--method", method, "Estimator")
      ->check(CLI::IsMember({"rpte", "srls", "gd"}));
  solve->add_option("--grid", grid, "Samples per majorizer curve")->check(CLI::Range(2, 1 << 20));
  solve->add_option("--oracle", oracle_h, "Also run the lattice oracle with this pitch (km)")
      ->check(CLI::PositiveNumber);
  solve->add_option("--candidates", candidates_path, "Write the discretized majorizer as CSV");

  auto* bench = app.add_subcommand("bench", "Monte Carlo comparison of the estimators");
  std::string config_path;
  std::string out_dir;
  unsigned threads = 0;
  bench->add_option("--config", config_path, "Benchmark config JSON")->required();
  bench->add_option("--out", out_dir, "Output directory")->required();
  bench->add_option("--threads", threads, "Worker threads (0 = all cores)");

  auto* isa = app.add_subcommand("isa", "Print the objective kernel in use");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return run_solve(scenario_path, method, grid, oracle_h, candidates_path);
    if (*bench) return run_bench(config_path, out_dir, threads);
    if (*isa) {
      std::cout << varloc::kernels::to_string(varloc::kernels::active_isa()) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return 0;
}
