#include "varloc/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>

#include "varloc/errors.hpp"

namespace varloc::io {

using nlohmann::json;

Scenario scenario_from_json(const json& j) {
  try {
    std::vector<Point2> anchors;
    for (const auto& a : j.at("anchors")) {
      if (!a.is_array() || a.size() != 2) throw DomainError("anchor must be [x, y]");
      anchors.push_back({a.at(0).get<double>(), a.at(1).get<double>()});
    }
    auto measurements = j.at("measurements").get<std::vector<double>>();
    const int L = j.at("outlier_count").get<int>();
    return Scenario(std::move(anchors), std::move(measurements), L);
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed scenario JSON: ") + e.what());
  }
}

json scenario_to_json(const Scenario& s) {
  json anchors = json::array();
  for (const auto& a : s.anchors()) anchors.push_back({a.x, a.y});
  return json{{"anchors", anchors},
              {"measurements", s.measurements()},
              {"outlier_count", s.outlier_count()}};
}

namespace {

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw DomainError("invalid JSON in " + path.string() + ": " + e.what());
  }
}

}  // namespace

Scenario load_scenario(const std::filesystem::path& path) {
  return scenario_from_json(read_json(path));
}

json estimate_to_json(const Estimate& e) {
  json prov{{"method", e.provenance.method}, {"source", to_string(e.provenance.source)}};
  if (e.provenance.first >= 0) prov["first"] = e.provenance.first;
  if (e.provenance.second >= 0) prov["second"] = e.provenance.second;
  if (e.provenance.grid_index >= 0) prov["grid_index"] = e.provenance.grid_index;
  return json{{"point_km", {e.point.x, e.point.y}},
              {"objective_km", e.objective},
              {"provenance", prov}};
}

bench::BenchConfig bench_config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("bench config must be a JSON object");
  static const std::set<std::string> known{
      "M",      "L_values",       "sigma_inlier", "sigma_outlier_grid", "n_placements",
      "n_outlier_lists", "grid_G", "seed",         "methods"};
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) throw ConfigError("unknown config field: " + key);
  }

  bench::BenchConfig cfg;
  try {
    if (j.contains("M")) cfg.M = j["M"].get<int>();
    if (j.contains("L_values")) cfg.L_values = j["L_values"].get<std::vector<int>>();
    if (j.contains("sigma_inlier")) cfg.sigma_inlier = j["sigma_inlier"].get<double>();
    if (j.contains("sigma_outlier_grid")) {
      cfg.sigma_outlier_grid = j["sigma_outlier_grid"].get<std::vector<double>>();
    }
    if (j.contains("n_placements")) cfg.n_placements = j["n_placements"].get<int>();
    if (j.contains("n_outlier_lists")) cfg.n_outlier_lists = j["n_outlier_lists"].get<int>();
    if (j.contains("grid_G")) cfg.grid_G = j["grid_G"].get<int>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("methods")) cfg.methods = j["methods"].get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  }
  bench::validate(cfg);
  return cfg;
}

bench::BenchConfig load_bench_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("invalid JSON in " + path.string() + ": " + e.what());
  }
  return bench_config_from_json(j);
}

std::string format_candidates_csv(const CandidateList& candidates) {
  std::string out = std::string(kCandidatesHeader) + "\n";
  char buf[96];
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& t = candidates.tags[i];
    const auto& p = candidates.points[i];
    std::snprintf(buf, sizeof buf, "%d,%d,%d,%.17g,%.17g\n", t.first, t.second, t.grid_index, p.x,
                  p.y);
    out += std::string(to_string(t.source)) + "," + buf;
  }
  return out;
}

}  // namespace varloc::io
