#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "varloc/errors.hpp"
#include "varloc/kernels.hpp"

namespace varloc::kernels {

AnchorTable::AnchorTable(const Scenario& s) : outlier_count(s.outlier_count()) {
  const auto& anchors = s.anchors();
  x.reserve(anchors.size());
  y.reserve(anchors.size());
  for (const auto& a : anchors) {
    x.push_back(a.x);
    y.push_back(a.y);
  }
  range = s.measurements();
}

void objective_batch_scalar(const AnchorTable& anchors, std::span<const Point2> points,
                            std::span<double> out) {
  if (out.size() < points.size()) throw DomainError("output span too small");
  const int M = anchors.size();
  const auto L = static_cast<std::size_t>(anchors.outlier_count);
  std::vector<double> dev(static_cast<std::size_t>(M));
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point2 p = points[i];
    for (int m = 0; m < M; ++m) {
      const double dx = p.x - anchors.x[m];
      const double dy = p.y - anchors.y[m];
      dev[m] = std::abs(anchors.range[m] - std::sqrt(dx * dx + dy * dy));
    }
    std::nth_element(dev.begin(), dev.begin() + L, dev.end(), std::greater<>());
    out[i] = dev[L];
  }
}

}  // namespace varloc::kernels
