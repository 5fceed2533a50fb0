#include "varloc/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <thread>

#include "varloc/baselines.hpp"
#include "varloc/errors.hpp"
#include "varloc/rng.hpp"
#include "varloc/solver.hpp"

namespace varloc::bench {

void validate(const BenchConfig& cfg) {
  if (cfg.M < 2) throw ConfigError("M must be >= 2");
  if (cfg.L_values.empty()) throw ConfigError("L_values must not be empty");
  for (int L : cfg.L_values) {
    if (L < 0 || L > cfg.M - 1) throw ConfigError("every L must lie in [0, M-1]");
    if (L > cfg.M / 2) throw ConfigError("L must be <= M/2 (outlier lists have length M/2)");
  }
  if (!(cfg.sigma_inlier > 0.0)) throw ConfigError("sigma_inlier must be > 0");
  if (cfg.sigma_outlier_grid.empty()) throw ConfigError("sigma_outlier_grid must not be empty");
  for (double s : cfg.sigma_outlier_grid) {
    if (!(s > 0.0)) throw ConfigError("outlier sigmas must be > 0");
  }
  if (cfg.n_placements < 1 || cfg.n_outlier_lists < 1) {
    throw ConfigError("n_placements and n_outlier_lists must be >= 1");
  }
  if (cfg.grid_G < 2) throw ConfigError("grid_G must be >= 2");
  if (cfg.methods.empty()) throw ConfigError("methods must not be empty");
  for (const auto& m : cfg.methods) {
    if (!is_known_method(m)) throw ConfigError("unknown method: " + m);
  }
}

GeneratedScenario generate_scenario(const BenchConfig& cfg, int placement, int list, int L,
                                    double sigma_outlier) {
  const int M = cfg.M;
  if (placement < 0 || placement >= cfg.n_placements) throw ConfigError("placement out of range");
  if (list < 0 || list >= cfg.n_outlier_lists) throw ConfigError("outlier list out of range");
  if (L < 0 || L > M / 2) throw ConfigError("L must lie in [0, M/2]");

  const auto p = static_cast<std::uint64_t>(placement);
  const auto l = static_cast<std::uint64_t>(list);

  CounterRng placement_rng(cfg.seed, "placement", {p});
  std::vector<Point2> anchors(static_cast<std::size_t>(M));
  for (auto& a : anchors) {
    a.x = placement_rng.uniform();
    a.y = placement_rng.uniform();
  }
  Point2 truth;
  truth.x = placement_rng.uniform();
  truth.y = placement_rng.uniform();

  // Uniform sample of M/2 distinct indices (partial Fisher-Yates).
  CounterRng list_rng(cfg.seed, "outlier_list", {p, l});
  std::vector<int> order(static_cast<std::size_t>(M));
  std::iota(order.begin(), order.end(), 0);
  const int list_len = M / 2;
  for (int k = 0; k < list_len; ++k) {
    const auto pick = k + static_cast<int>(list_rng.below(static_cast<std::uint64_t>(M - k)));
    std::swap(order[k], order[pick]);
  }
  std::vector<int> outlier_list(order.begin(), order.begin() + list_len);

  std::vector<double> sigma(static_cast<std::size_t>(M), cfg.sigma_inlier);
  for (int k = 0; k < L; ++k) sigma[outlier_list[k]] = sigma_outlier;

  CounterRng noise_rng(cfg.seed, "noise", {p, l});
  std::vector<double> y(static_cast<std::size_t>(M));
  for (int m = 0; m < M; ++m) {
    const double z = noise_rng.normal();
    y[m] = std::abs(distance(truth, anchors[m]) + sigma[m] * z);
  }

  return GeneratedScenario{Scenario(std::move(anchors), std::move(y), L), truth,
                           std::move(outlier_list)};
}

bool is_known_method(const std::string& method) {
  return method == "rpte" || method == "srls" || method == "gd";
}

Estimate run_method(const std::string& method, const Scenario& s, int grid_G) {
  if (method == "rpte") return rpte(s, grid_G);
  if (method == "srls") return srls(s);
  if (method == "gd") return gd_rls(s);
  throw DomainError("unknown method: " + method);
}

std::vector<TrialRecord> run_monte_carlo(const BenchConfig& cfg, unsigned threads) {
  validate(cfg);
  const std::size_t per_placement = static_cast<std::size_t>(cfg.n_outlier_lists) *
                                    cfg.L_values.size() * cfg.sigma_outlier_grid.size() *
                                    cfg.methods.size();
  std::vector<TrialRecord> records(per_placement * static_cast<std::size_t>(cfg.n_placements));

  auto run_placement = [&](int p) {
    std::size_t slot = per_placement * static_cast<std::size_t>(p);
    for (int l = 0; l < cfg.n_outlier_lists; ++l) {
      for (int L : cfg.L_values) {
        for (double sigma_o : cfg.sigma_outlier_grid) {
          const GeneratedScenario gen = generate_scenario(cfg, p, l, L, sigma_o);
          for (const auto& method : cfg.methods) {
            TrialRecord& rec = records[slot++];
            rec.placement = p;
            rec.list = l;
            rec.L = L;
            rec.sigma_outlier = sigma_o;
            rec.method = method;
            const auto start = std::chrono::steady_clock::now();
            try {
              const Estimate e = run_method(method, gen.scenario, cfg.grid_G);
              rec.estimate = e.point;
              rec.error_m = 1000.0 * distance(e.point, gen.truth);
              rec.ok = std::isfinite(rec.error_m);
              if (!rec.ok) rec.failure = "non-finite estimate";
            } catch (const std::exception& ex) {
              rec.ok = false;
              rec.failure = ex.what();
            }
            rec.wall_time_s =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
          }
        }
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(cfg.n_placements));
  if (threads <= 1) {
    for (int p = 0; p < cfg.n_placements; ++p) run_placement(p);
  } else {
    // Records land in pre-assigned slots, so completion order is irrelevant.
    std::atomic<int> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (int p = next++; p < cfg.n_placements; p = next++) run_placement(p);
      });
    }
  }
  return records;
}

std::vector<SummaryRow> summarize(const std::vector<TrialRecord>& records) {
  std::vector<SummaryRow> rows;
  std::vector<double> sums;
  std::map<std::tuple<int, double, std::string>, std::size_t> index;
  for (const auto& r : records) {
    const auto key = std::make_tuple(r.L, r.sigma_outlier, r.method);
    auto it = index.find(key);
    if (it == index.end()) {
      it = index.emplace(key, rows.size()).first;
      rows.push_back(SummaryRow{r.L, r.sigma_outlier, r.method, 0, 0, 0.0});
      sums.push_back(0.0);
    }
    SummaryRow& row = rows[it->second];
    if (r.ok) {
      ++row.n;
      sums[it->second] += r.error_m;
    } else {
      ++row.failed;
    }
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].mean_error_m = rows[i].n > 0 ? sums[i] / rows[i].n : NAN;
  }
  return rows;
}

namespace {

std::string fmt_double(double v) {
  if (!std::isfinite(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_time(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace

std::string format_trials_csv(const std::vector<TrialRecord>& records) {
  std::string out = std::string(kTrialsHeader) + "\n";
  for (const auto& r : records) {
    out += std::to_string(r.placement) + "," + std::to_string(r.list) + "," +
           std::to_string(r.L) + "," + fmt_double(r.sigma_outlier) + "," + r.method + ",";
    if (r.ok) {
      out += fmt_double(r.estimate.x) + "," + fmt_double(r.estimate.y) + "," +
             fmt_double(r.error_m);
    } else {
      out += "nan,nan,nan";
    }
    out += "," + fmt_time(r.wall_time_s) + "\n";
  }
  return out;
}

std::string format_summary_csv(const std::vector<SummaryRow>& rows) {
  std::string out = std::string(kSummaryHeader) + "\n";
  for (const auto& r : rows) {
    out += std::to_string(r.L) + "," + fmt_double(r.sigma_outlier) + "," + r.method + "," +
           std::to_string(r.n) + "," + std::to_string(r.failed) + "," +
           fmt_double(r.mean_error_m) + "\n";
  }
  return out;
}

void emit_report(const std::vector<TrialRecord>& records, const std::filesystem::path& dir) {
  if (records.empty()) throw DomainError("no trial records to report");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  write_file(dir / "trials.csv", format_trials_csv(records));
  write_file(dir / "summary.csv", format_summary_csv(summarize(records)));
}

}  // namespace varloc::bench
