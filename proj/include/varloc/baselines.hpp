#pragma once

#include <vector>

#include "varloc/core.hpp"

namespace varloc {

/// Squared-range least squares: minimizes sum_m (||x - a_m||^2 - y_m^2)^2
/// exactly through its generalized trust-region form, by bisection on the
/// multiplier. Collinear anchors with M >= 3 throw SolverDegenerate; M = 2
/// falls back to the minimum-norm least-squares solution.
Estimate srls(const Scenario& s);

struct GdOptions {
  int max_iters = 5000;
  double grad_tol = 1e-8;
};

struct GdTrace {
  int iterations = 0;
  double final_gradient_norm = 0.0;
  std::vector<double> objective_history;  // R-LS objective per accepted iterate
};

/// Range least squares objective sum_m (y_m - ||x - a_m||)^2.
double rls_objective(Point2 x, const Scenario& s);

/// Gradient of rls_objective. A term with x == a_m contributes 0.
Point2 rls_gradient(Point2 x, const Scenario& s);

/// Gradient descent with Armijo backtracking on the range least squares
/// objective, started from srls(s) (or the anchor mean if srls fails).
Estimate gd_rls(const Scenario& s, const GdOptions& options = {});

/// Same descent from an explicit starting point; optionally records a trace.
Estimate gd_rls_from(const Scenario& s, Point2 start, const GdOptions& options = {},
                     GdTrace* trace = nullptr);

}  // namespace varloc
