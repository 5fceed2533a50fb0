#pragma once

#include <variant>

#include "varloc/types.hpp"

namespace varloc {

/// Translated/rotated coordinate system for one anchor pair. The anchor with
/// the larger range ("hi") sits at local (-c, 0), the other ("lo") at (c, 0).
struct LocalFrame {
  Point2 center;       // midpoint of the two anchors
  double angle = 0.0;  // polar angle of anchor_lo - center, in (-pi, pi]
  double cos_angle = 1.0;
  double sin_angle = 0.0;
  double c = 0.0;    // half the anchor separation
  double k_e = 0.0;  // y_hi + y_lo
  double k_h = 0.0;  // y_hi - y_lo
  int idx_hi = 0;
  int idx_lo = 1;
  Point2 anchor_hi;
  Point2 anchor_lo;

  /// center + R * local
  Point2 to_world(Point2 local) const;
  /// R^T * (world - center)
  Point2 to_local(Point2 world) const;
};

enum class PairCase { EllipseOnly, HyperbolaOnly, Both };

const char* to_string(PairCase pair_case);

/// Anchors closer than this are treated as coincident.
inline constexpr double kCoincidentAnchorTolerance = 1e-12;

/// Builds the frame for anchors a1, a2 with ranges y1, y2. The anchor with
/// the larger range becomes idx_hi (a1 on ties). Throws DegeneratePair when
/// the anchors coincide.
LocalFrame build_local_frame(Point2 a1, Point2 a2, double y1, double y2, int idx1 = 0,
                             int idx2 = 1);

PairCase classify_pair(const LocalFrame& frame);

/// Point of the standard ellipse with foci at the two anchors and distance
/// sum k_e. Requires 2c <= k_e.
Point2 ellipse_point(const LocalFrame& frame, double theta);

/// Point of the half-hyperbola branch nearer anchor_lo, where the distance to
/// anchor_hi minus the distance to anchor_lo is k_h. Requires k_h <= 2c, c > 0.
Point2 hyperbola_point(const LocalFrame& frame, double t);

Point2 circle_point(Point2 center, double radius, double theta);

// Majorizer pieces.

struct SingletonCurve {
  Point2 point;
  int anchor = 0;
};

struct CircleCurve {
  Point2 center;
  double radius = 0.0;
  int anchor = 0;
};

struct EllipseCurve {
  LocalFrame frame;
};

struct HalfHyperbolaCurve {
  LocalFrame frame;
  double U = 0.0;  // parameter range is t in [-U, U]
};

using CurveComponent = std::variant<SingletonCurve, CircleCurve, EllipseCurve, HalfHyperbolaCurve>;

}  // namespace varloc
