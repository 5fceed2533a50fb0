#include "varloc/core.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "varloc/errors.hpp"

namespace varloc {

Scenario::Scenario(std::vector<Point2> anchors, std::vector<double> measurements,
                   int outlier_count)
    : anchors_(std::move(anchors)),
      measurements_(std::move(measurements)),
      outlier_count_(outlier_count) {
  const auto M = anchors_.size();
  if (M < 2) throw DomainError("scenario needs at least 2 anchors");
  if (measurements_.size() != M) {
    throw DomainError("scenario has " + std::to_string(M) + " anchors but " +
                      std::to_string(measurements_.size()) + " measurements");
  }
  for (const auto& a : anchors_) {
    if (!is_finite(a)) throw DomainError("anchor coordinates must be finite");
  }
  for (double y : measurements_) {
    if (!std::isfinite(y) || y < 0.0) throw DomainError("measurements must be finite and >= 0");
  }
  if (outlier_count_ < 0 || outlier_count_ > static_cast<int>(M) - 1) {
    throw DomainError("outlier_count must lie in [0, M-1]");
  }
}

Scenario Scenario::with_outlier_count(int outlier_count) const {
  return Scenario(anchors_, measurements_, outlier_count);
}

const char* to_string(Source source) {
  switch (source) {
    case Source::Singleton: return "singleton";
    case Source::Circle: return "circle";
    case Source::Ellipse: return "ellipse";
    case Source::HalfHyperbola: return "hyperbola";
    case Source::Oracle: return "oracle";
    case Source::Baseline: return "baseline";
  }
  return "unknown";
}

double percentile(std::span<const double> z, int L) {
  if (z.empty()) throw DomainError("percentile of an empty vector");
  if (L < 0 || L >= static_cast<int>(z.size())) {
    throw DomainError("percentile index L=" + std::to_string(L) + " outside [0, " +
                      std::to_string(z.size() - 1) + "]");
  }
  for (double v : z) {
    if (!std::isfinite(v)) throw DomainError("percentile input must be finite");
  }
  std::vector<double> work(z.begin(), z.end());
  std::nth_element(work.begin(), work.begin() + L, work.end(), std::greater<>());
  return work[static_cast<std::size_t>(L)];
}

double atom_deviation(Point2 x, Point2 a, double y) { return std::abs(y - distance(x, a)); }

double objective(Point2 x, const Scenario& s) {
  const auto& anchors = s.anchors();
  const auto& ranges = s.measurements();
  std::vector<double> dev(anchors.size());
  for (std::size_t m = 0; m < anchors.size(); ++m) dev[m] = atom_deviation(x, anchors[m], ranges[m]);
  return percentile(dev, s.outlier_count());
}

double empirical_var(std::span<const double> losses, double beta) {
  const auto M = static_cast<double>(losses.size());
  if (losses.empty()) throw DomainError("empirical VaR of an empty sample");
  if (!(beta >= 1.0 / M - 1e-12 && beta <= 1.0 + 1e-12)) {
    throw DomainError("beta must lie in [1/M, 1]");
  }
  const double discarded = (1.0 - beta) * M;
  const double rounded = std::round(discarded);
  if (std::abs(discarded - rounded) > 1e-9) {
    const double lo = std::floor(discarded);
    std::ostringstream msg;
    msg << "beta=" << beta << " is not a multiple of 1/M (M=" << losses.size()
        << "); nearest admissible values are " << 1.0 - (lo + 1.0) / M << " and "
        << 1.0 - lo / M;
    throw DomainError(msg.str());
  }
  return percentile(losses, static_cast<int>(rounded));
}

ScalarMinimum scalar_percentile_minimize(std::span<const double> d, int L) {
  if (d.empty()) throw DomainError("scalar_percentile_minimize needs data");
  const auto M = d.size();
  if (L < 0 || L >= static_cast<int>(M)) throw DomainError("L must lie in [0, M-1]");

  std::vector<double> candidates(d.begin(), d.end());
  for (std::size_t i = 0; i < M; ++i) {
    for (std::size_t j = i + 1; j < M; ++j) candidates.push_back(0.5 * (d[i] + d[j]));
  }

  std::vector<double> dev(M);
  ScalarMinimum best{0.0, INFINITY};
  for (double x : candidates) {
    for (std::size_t m = 0; m < M; ++m) dev[m] = std::abs(x - d[m]);
    const double value = percentile(dev, L);
    if (value < best.value || (value == best.value && x < best.x)) best = {x, value};
  }
  return best;
}

}  // namespace varloc
