#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "varloc/bench.hpp"
#include "varloc/core.hpp"
#include "varloc/majorizer.hpp"

namespace varloc::io {

/// {"anchors": [[x,y],...], "measurements": [...], "outlier_count": L}, km.
Scenario scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const Scenario& s);
Scenario load_scenario(const std::filesystem::path& path);

/// {"point_km": [x,y], "objective_km": v, "provenance": {...}}
nlohmann::json estimate_to_json(const Estimate& e);

/// Missing fields keep their defaults; unknown fields are rejected.
bench::BenchConfig bench_config_from_json(const nlohmann::json& j);
bench::BenchConfig load_bench_config(const std::filesystem::path& path);

inline constexpr const char* kCandidatesHeader =
    "component_kind,pair_i,pair_j,grid_index,x_km,y_km";

std::string format_candidates_csv(const CandidateList& candidates);

}  // namespace varloc::io
