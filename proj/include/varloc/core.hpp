#pragma once

#include <span>
#include <string>
#include <vector>

#include "varloc/types.hpp"

namespace varloc {

/// A localization instance: anchor positions, one range measurement per
/// anchor, and the number of measurements treated as outliers.
///
/// Construction validates the instance; a Scenario that exists is valid
/// (M >= 2, finite anchors, finite non-negative ranges, 0 <= L <= M-1).
class Scenario {
 public:
  Scenario(std::vector<Point2> anchors, std::vector<double> measurements, int outlier_count);

  const std::vector<Point2>& anchors() const { return anchors_; }
  const std::vector<double>& measurements() const { return measurements_; }
  int outlier_count() const { return outlier_count_; }
  int size() const { return static_cast<int>(anchors_.size()); }

  /// Same anchors and ranges, different outlier count.
  Scenario with_outlier_count(int outlier_count) const;

 private:
  std::vector<Point2> anchors_;
  std::vector<double> measurements_;
  int outlier_count_;
};

/// Where an estimate came from.
enum class Source { Singleton, Circle, Ellipse, HalfHyperbola, Oracle, Baseline };

const char* to_string(Source source);

struct Provenance {
  std::string method;  // "rpte", "oracle", "srls", "gd", ...
  Source source = Source::Baseline;
  int first = -1;       // anchor index, or lower index of an anchor pair
  int second = -1;      // upper index of an anchor pair, -1 otherwise
  int grid_index = -1;  // sample index on the curve, or lattice index
};

struct Estimate {
  Point2 point;
  double objective = 0.0;  // km
  Provenance provenance;
};

/// The (L+1)-th largest entry of z, i.e. the maximum after discarding the L
/// largest entries. p_0 is max(z) and p_{M-1} is min(z).
double percentile(std::span<const double> z, int L);

/// | y - ||x - a|| |
double atom_deviation(Point2 x, Point2 a, double y);

/// Percentile of the per-anchor range deviations at x, with L = s.outlier_count().
double objective(Point2 x, const Scenario& s);

/// Empirical beta-VaR of a sample of losses. Only confidence levels that are
/// multiples of 1/M are admissible; the result is percentile(losses, (1-beta)M).
double empirical_var(std::span<const double> losses, double beta);

struct ScalarMinimum {
  double x = 0.0;
  double value = 0.0;
};

/// Exact global minimizer of x -> p_L{|x - d_m|} over the reals, found by
/// evaluating the data points and all pairwise midpoints. Ties go to the
/// smallest x.
ScalarMinimum scalar_percentile_minimize(std::span<const double> d, int L);

}  // namespace varloc
