#pragma once

#include <cstdint>
#include <optional>

#include "varloc/core.hpp"
#include "varloc/majorizer.hpp"

namespace varloc {

inline constexpr int kDefaultGrid = 20;

/// Grid estimator over the discretized majorizer: evaluates the percentile
/// objective at every candidate and returns the first minimizer in candidate
/// order.
Estimate rpte(const Scenario& s, int G = kDefaultGrid);
Estimate rpte(const Scenario& s, const DiscretizeOptions& options);

/// Picks the best candidate of an already discretized set.
Estimate select_best(const Scenario& s, const CandidateList& candidates);

struct BoundingBox {
  Point2 lo;
  Point2 hi;
};

struct OracleOptions {
  std::optional<BoundingBox> bbox;  // default: square around ||x|| <= B(anchor mean)
  std::uint64_t budget = 100'000'000;
  unsigned threads = 0;  // 0 = hardware concurrency
};

/// Brute-force reference: evaluates the objective on the lattice
/// lo + (i*h, j*h) covering the box and returns the best lattice point
/// (row-major, first minimum wins). Throws ResourceError above the budget.
Estimate oracle_grid(const Scenario& s, double h, const OracleOptions& options = {});

/// Default oracle box: [-B, B]^2 with B = norm_bound(s, anchor mean).
BoundingBox default_oracle_box(const Scenario& s);

Point2 anchor_mean(const Scenario& s);

}  // namespace varloc
