#include "varloc/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "varloc/errors.hpp"

namespace varloc {

Point2 LocalFrame::to_world(Point2 local) const {
  return {center.x + cos_angle * local.x - sin_angle * local.y,
          center.y + sin_angle * local.x + cos_angle * local.y};
}

Point2 LocalFrame::to_local(Point2 world) const {
  const Point2 d = world - center;
  return {cos_angle * d.x + sin_angle * d.y, -sin_angle * d.x + cos_angle * d.y};
}

const char* to_string(PairCase pair_case) {
  switch (pair_case) {
    case PairCase::EllipseOnly: return "ellipse-only";
    case PairCase::HyperbolaOnly: return "hyperbola-only";
    case PairCase::Both: return "both";
  }
  return "unknown";
}

LocalFrame build_local_frame(Point2 a1, Point2 a2, double y1, double y2, int idx1, int idx2) {
  if (!(y1 >= 0.0) || !(y2 >= 0.0)) throw DomainError("ranges must be >= 0");
  if (distance(a1, a2) < kCoincidentAnchorTolerance) {
    throw DegeneratePair("anchors " + std::to_string(idx1) + " and " + std::to_string(idx2) +
                         " coincide");
  }
  if (y2 > y1) {
    std::swap(a1, a2);
    std::swap(y1, y2);
    std::swap(idx1, idx2);
  }

  LocalFrame f;
  f.anchor_hi = a1;
  f.anchor_lo = a2;
  f.idx_hi = idx1;
  f.idx_lo = idx2;
  f.center = 0.5 * (a1 + a2);
  const Point2 dir = a2 - f.center;
  f.c = norm(dir);
  f.angle = std::atan2(dir.y, dir.x);
  // atan2 returns -pi for (-x, -0.0); fold onto the half-open range (-pi, pi].
  if (f.angle <= -M_PI) f.angle = M_PI;
  f.cos_angle = dir.x / f.c;
  f.sin_angle = dir.y / f.c;
  f.k_e = y1 + y2;
  f.k_h = y1 - y2;
  return f;
}

PairCase classify_pair(const LocalFrame& frame) {
  const double two_c = 2.0 * frame.c;
  if (two_c < frame.k_h) return PairCase::EllipseOnly;
  if (two_c > frame.k_e) return PairCase::HyperbolaOnly;
  return PairCase::Both;
}

Point2 ellipse_point(const LocalFrame& frame, double theta) {
  if (2.0 * frame.c > frame.k_e) throw DomainError("ellipse requires 2c <= k_E");
  const double semi_major = 0.5 * frame.k_e;
  const double semi_minor = std::sqrt(std::max(0.0, semi_major * semi_major - frame.c * frame.c));
  return frame.to_world({semi_major * std::cos(theta), semi_minor * std::sin(theta)});
}

Point2 hyperbola_point(const LocalFrame& frame, double t) {
  if (!(frame.c > 0.0) || frame.k_h > 2.0 * frame.c) {
    throw DomainError("half-hyperbola requires c > 0 and k_H <= 2c");
  }
  const double half_k = 0.5 * frame.k_h;
  const double semi_conj = std::sqrt(std::max(0.0, frame.c * frame.c - half_k * half_k));
  return frame.to_world({half_k * std::cosh(t), semi_conj * std::sinh(t)});
}

Point2 circle_point(Point2 center, double radius, double theta) {
  return {center.x + radius * std::cos(theta), center.y + radius * std::sin(theta)};
}

}  // namespace varloc
