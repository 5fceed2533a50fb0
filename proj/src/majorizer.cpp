#include "varloc/majorizer.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>

#include "varloc/errors.hpp"

namespace varloc {

double norm_bound(const Scenario& s, Point2 x_ref) {
  const auto& anchors = s.anchors();
  const auto& ranges = s.measurements();
  std::vector<double> dev(anchors.size());
  double reach = 0.0;
  for (std::size_t m = 0; m < anchors.size(); ++m) {
    dev[m] = atom_deviation(x_ref, anchors[m], ranges[m]);
    reach = std::max(reach, norm(anchors[m]) + ranges[m]);
  }
  return percentile(dev, s.outlier_count()) + reach;
}

double truncation_bound(const LocalFrame& frame, double B) {
  if (!(frame.c > 0.0)) throw DomainError("truncation bound needs c > 0");
  if (frame.k_h > 2.0 * frame.c) throw DomainError("truncation bound needs k_H <= 2c");
  if (!(B >= 0.0)) throw DomainError("norm bound must be >= 0");

  const double c = frame.c;
  const double reach = B + c + norm(frame.anchor_lo);
  const double half_k = 0.5 * frame.k_h;
  const double conj_sq = std::max(0.0, c * c - half_k * half_k);
  const double u_hat = std::sqrt((reach * reach + conj_sq) / (c * c));
  assert(u_hat >= 1.0);
  return std::log(u_hat + std::sqrt(std::max(0.0, u_hat * u_hat - 1.0)));
}

MajorizerSet build_majorizer(const Scenario& s) {
  const auto& anchors = s.anchors();
  const auto& ranges = s.measurements();
  const int M = s.size();

  MajorizerSet phi;
  Point2 sum{};
  for (const auto& a : anchors) sum = sum + a;
  phi.anchor_ref = (1.0 / M) * sum;
  phi.norm_bound = norm_bound(s, phi.anchor_ref);

  for (int m = 0; m < M; ++m) phi.components.emplace_back(SingletonCurve{anchors[m], m});
  for (int m = 0; m < M; ++m) {
    if (ranges[m] > kZeroRangeTolerance) {
      phi.components.emplace_back(CircleCurve{anchors[m], ranges[m], m});
    }
  }

  for (int i = 0; i < M; ++i) {
    for (int j = i + 1; j < M; ++j) {
      LocalFrame frame;
      try {
        frame = build_local_frame(anchors[i], anchors[j], ranges[i], ranges[j], i, j);
      } catch (const DegeneratePair& e) {
        phi.skipped_pairs.push_back({i, j, e.what()});
        continue;
      }
      const PairCase pc = classify_pair(frame);
      if (pc != PairCase::HyperbolaOnly) phi.components.emplace_back(EllipseCurve{frame});
      if (pc != PairCase::EllipseOnly) {
        phi.components.emplace_back(HalfHyperbolaCurve{frame, truncation_bound(frame, phi.norm_bound)});
      }
    }
  }
  return phi;
}

namespace {

std::pair<int, int> ordered_pair(const LocalFrame& f) {
  return {std::min(f.idx_hi, f.idx_lo), std::max(f.idx_hi, f.idx_lo)};
}

}  // namespace

CandidateList discretize(const MajorizerSet& phi, int G) {
  return discretize(phi, DiscretizeOptions{.grid = G});
}

CandidateList discretize(const MajorizerSet& phi, const DiscretizeOptions& options) {
  const int G = options.grid;
  const int GH = options.hyperbola_grid > 0 ? options.hyperbola_grid : G;
  if (G < 2 || GH < 2) throw DomainError("grid size must be >= 2");
  if (!(options.truncation_scale > 0.0)) throw DomainError("truncation scale must be > 0");

  constexpr double two_pi = 2.0 * std::numbers::pi;
  CandidateList out;
  auto push = [&out](Point2 p, Source src, int first, int second, int g) {
    out.points.push_back(p);
    out.tags.push_back({src, first, second, g});
  };

  for (const auto& component : phi.components) {
    if (const auto* s = std::get_if<SingletonCurve>(&component)) {
      push(s->point, Source::Singleton, s->anchor, -1, 0);
    } else if (const auto* c = std::get_if<CircleCurve>(&component)) {
      for (int g = 0; g < G; ++g) {
        push(circle_point(c->center, c->radius, two_pi * g / (G - 1)), Source::Circle, c->anchor,
             -1, g);
      }
    } else if (const auto* e = std::get_if<EllipseCurve>(&component)) {
      const auto [i, j] = ordered_pair(e->frame);
      for (int g = 0; g < G; ++g) {
        push(ellipse_point(e->frame, two_pi * g / (G - 1)), Source::Ellipse, i, j, g);
      }
    } else if (const auto* h = std::get_if<HalfHyperbolaCurve>(&component)) {
      const auto [i, j] = ordered_pair(h->frame);
      const double U = h->U * options.truncation_scale;
      for (int g = 0; g < GH; ++g) {
        push(hyperbola_point(h->frame, -U + 2.0 * U * g / (GH - 1)), Source::HalfHyperbola, i, j,
             g);
      }
    }
  }
  return out;
}

}  // namespace varloc
