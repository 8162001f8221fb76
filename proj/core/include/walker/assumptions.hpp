#pragma once

#include <optional>
#include <string>
#include <vector>

#include "walker/model.hpp"

namespace walker {

/// Sample ranges for the grid checks.
struct GridSpec {
  double t_min = 0.0;
  double t_max = 50.0;
  int t_points = 512;
  double x_min = -20.0;
  double x_max = 20.0;
  int x_points = 2048;
  /// Half-width of the (x, v) square searched for the lambda condition.
  double lambda_box = 10.0;
  int lambda_points = 201;
};

/// Outcome of one grid-sampled inequality lhs >= rhs; `worst_margin` is the
/// minimum of lhs - rhs over the grid.
struct CheckResult {
  bool ok = false;
  double worst_margin = 0.0;
  double worst_at = 0.0;
};

struct AssumptionReport {
  CheckResult kernel;         // K'(t) <= -delta K(t)
  CheckResult h_growth;       // max(|H|, |H'|) <= a_H (|x|^p1 + 1)
  CheckResult u_growth;       // |U'| <= a0 (U^n0 + 1)
  CheckResult u_coercive;     // x U' >= a1 U - a2
  CheckResult u_dominates;    // U >= a3 |x|^{2 max(1, p1 + eps1)}, U >= 1
  std::optional<double> lambda;   // lambda for Phi + lambda x v >= lambda1 Phi
  std::optional<double> lambda1;  // grid minimum of (Phi + lambda x v) / Phi
  double potential_shift = 0.0;
  std::vector<std::string> notes;

  bool all_ok() const noexcept {
    return kernel.ok && h_growth.ok && u_growth.ok && u_coercive.ok && u_dominates.ok && lambda.has_value();
  }
};

/// Checks the kernel, wave-force and potential conditions on a grid.
/// The potential is checked as U + potential_shift; a shift of 1 lifts the
/// harmonic potential into [1, inf) without changing the drift.
/// One-dimensional checks; for dim = 2 they run along a ray, which suffices
/// for radially symmetric H and U.
AssumptionReport verify_assumptions(const Model& model, const GridSpec& grid = {}, double potential_shift = 1.0);

}  // namespace walker
