#pragma once

#include <cmath>

namespace varloc {

/// A point (or vector) in the plane. Lengths are kilometers throughout.
struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
  friend constexpr bool operator==(Point2 a, Point2 b) = default;
};

// Written out as sqrt(x*x + y*y) rather than std::hypot: every objective
// evaluator (scalar and SIMD) uses this exact operation sequence.
inline double norm(Point2 p) { return std::sqrt(p.x * p.x + p.y * p.y); }

inline double distance(Point2 a, Point2 b) { return norm(a - b); }

inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

}  // namespace varloc
