#include "varloc/baselines.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "varloc/errors.hpp"
#include "varloc/solver.hpp"

namespace varloc {

namespace {

constexpr double kSecularTolerance = 1e-10;
constexpr int kMaxBisectionSteps = 200;
constexpr int kMaxBracketSteps = 200;

Estimate make_estimate(const Scenario& s, Point2 p, const char* method) {
  return Estimate{p, objective(p, s), Provenance{method, Source::Baseline, -1, -1, -1}};
}

}  // namespace

// With z = (x, ||x||^2) the squared-range residuals are linear in z:
//   ||x - a_m||^2 - y_m^2 = [-2 a_m^T, 1] z - (y_m^2 - ||a_m||^2),
// so SR-LS is min ||A z - b||^2 s.t. z^T D z + 2 f^T z = 0 with
// D = diag(1, 1, 0), f = (0, 0, -1/2). The optimal multiplier is the root of
// the decreasing function phi(lambda) = z(lambda)^T D z(lambda) + 2 f^T z(lambda)
// on lambda > -1 / mu_max, mu_max the largest eigenvalue of the pencil (D, A^T A).
Estimate srls(const Scenario& s) {
  const int M = s.size();
  Eigen::MatrixXd A(M, 3);
  Eigen::VectorXd b(M);
  for (int m = 0; m < M; ++m) {
    const Point2 a = s.anchors()[m];
    const double y = s.measurements()[m];
    A(m, 0) = -2.0 * a.x;
    A(m, 1) = -2.0 * a.y;
    A(m, 2) = 1.0;
    b(m) = y * y - (a.x * a.x + a.y * a.y);
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
  qr.setThreshold(1e-10);
  if (qr.rank() < 3) {
    if (M == 2) {
      const Eigen::VectorXd z = A.completeOrthogonalDecomposition().solve(b);
      return make_estimate(s, {z(0), z(1)}, "srls");
    }
    throw SolverDegenerate("srls: anchors are collinear, squared-range system is rank deficient");
  }

  const Eigen::Matrix3d AtA = A.transpose() * A;
  const Eigen::Vector3d Atb = A.transpose() * b;
  const Eigen::Matrix3d D = Eigen::Vector3d(1.0, 1.0, 0.0).asDiagonal();
  const Eigen::Vector3d f(0.0, 0.0, -0.5);

  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::Matrix3d> pencil(D, AtA);
  const double mu_max = pencil.eigenvalues().maxCoeff();
  const double lower = -1.0 / mu_max;

  auto solve_at = [&](double lambda) -> Eigen::Vector3d {
    return (AtA + lambda * D).ldlt().solve(Atb - lambda * f);
  };
  auto phi = [&](const Eigen::Vector3d& z) { return z(0) * z(0) + z(1) * z(1) - z(2); };

  // Bracket the root: phi -> +inf as lambda approaches the lower end.
  double lo = lower;
  double hi = std::max(0.0, lower) + 1.0;
  for (int k = 0; k < kMaxBracketSteps && phi(solve_at(hi)) > 0.0; ++k) {
    lo = hi;
    hi = lower + 2.0 * (hi - lower);
  }

  Eigen::Vector3d z = solve_at(0.5 * (lo + hi));
  for (int k = 0; k < kMaxBisectionSteps; ++k) {
    const double mid = 0.5 * (lo + hi);
    z = solve_at(mid);
    const double value = phi(z);
    if (std::abs(value) <= kSecularTolerance) break;
    if (value > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return make_estimate(s, {z(0), z(1)}, "srls");
}

double rls_objective(Point2 x, const Scenario& s) {
  double sum = 0.0;
  for (int m = 0; m < s.size(); ++m) {
    const double r = s.measurements()[m] - distance(x, s.anchors()[m]);
    sum += r * r;
  }
  return sum;
}

Point2 rls_gradient(Point2 x, const Scenario& s) {
  Point2 g{};
  for (int m = 0; m < s.size(); ++m) {
    const Point2 d = x - s.anchors()[m];
    const double r = norm(d);
    if (r == 0.0) continue;
    const double w = -2.0 * (s.measurements()[m] - r) / r;
    g = g + w * d;
  }
  return g;
}

Estimate gd_rls_from(const Scenario& s, Point2 start, const GdOptions& options, GdTrace* trace) {
  constexpr double kArmijoSlope = 1e-4;
  constexpr double kShrink = 0.5;
  constexpr double kMinStep = 1e-30;

  Point2 x = start;
  double fx = rls_objective(x, s);
  if (trace) trace->objective_history.assign(1, fx);
  int iter = 0;
  Point2 g = rls_gradient(x, s);
  for (; iter < options.max_iters; ++iter) {
    const double gnorm2 = g.x * g.x + g.y * g.y;
    if (std::sqrt(gnorm2) <= options.grad_tol) break;

    double step = 1.0;
    Point2 next = x - step * g;
    double fnext = rls_objective(next, s);
    while (fnext > fx - kArmijoSlope * step * gnorm2 && step > kMinStep) {
      step *= kShrink;
      next = x - step * g;
      fnext = rls_objective(next, s);
    }
    if (!(fnext <= fx)) break;  // no descent possible at machine precision

    x = next;
    fx = fnext;
    g = rls_gradient(x, s);
    if (trace) trace->objective_history.push_back(fx);
  }
  if (trace) {
    trace->iterations = iter;
    trace->final_gradient_norm = norm(g);
  }
  return make_estimate(s, x, "gd");
}

Estimate gd_rls(const Scenario& s, const GdOptions& options) {
  Point2 start;
  try {
    start = srls(s).point;
  } catch (const SolverDegenerate&) {
    start = anchor_mean(s);
  }
  return gd_rls_from(s, start, options);
}

}  // namespace varloc
