#pragma once

#include <string>
#include <vector>

#include "varloc/core.hpp"
#include "varloc/geometry.hpp"

namespace varloc {

struct SkippedPair {
  int first = 0;
  int second = 0;
  std::string reason;
};

/// Finite superset of the curves that contain every global minimizer of the
/// percentile objective: anchors, range circles, and for each anchor pair the
/// equal-deviation ellipse and/or truncated half-hyperbola.
///
/// Component order is fixed: singletons by anchor index, circles by anchor
/// index, then pairs (i < j) lexicographically with the ellipse before the
/// hyperbola. The solver's tie-breaking depends on this order.
struct MajorizerSet {
  std::vector<CurveComponent> components;
  double norm_bound = 0.0;  // B(anchor_ref)
  Point2 anchor_ref;
  std::vector<SkippedPair> skipped_pairs;
};

/// Upper bound on the norm of any minimizer:
///   p_L{|y_m - ||x_ref - a_m|||} + max_m(||a_m|| + y_m).
double norm_bound(const Scenario& s, Point2 x_ref);

/// Hyperbola parameter limit U such that every point of the half-hyperbola
/// with norm <= B has |t| <= U.
double truncation_bound(const LocalFrame& frame, double B);

/// Builds the truncated majorizer using the anchor mean as reference point.
MajorizerSet build_majorizer(const Scenario& s);

/// Ranges below this are treated as zero and get no circle.
inline constexpr double kZeroRangeTolerance = 1e-12;

struct CandidateTag {
  Source source = Source::Singleton;
  int first = -1;
  int second = -1;
  int grid_index = -1;
};

/// Discretized majorizer; tags[i] describes points[i].
struct CandidateList {
  std::vector<Point2> points;
  std::vector<CandidateTag> tags;

  std::size_t size() const { return points.size(); }
};

struct DiscretizeOptions {
  int grid = 20;                  // samples per circle/ellipse/hyperbola
  int hyperbola_grid = 0;         // overrides `grid` on hyperbolas when > 0
  double truncation_scale = 1.0;  // multiplies every hyperbola's U
};

/// theta_g = 2*pi*g/(G-1), t_g = -U + 2U*g/(G-1), g = 0..G-1. Closed curves
/// keep both endpoint samples.
CandidateList discretize(const MajorizerSet& phi, int G);
CandidateList discretize(const MajorizerSet& phi, const DiscretizeOptions& options);

}  // namespace varloc
