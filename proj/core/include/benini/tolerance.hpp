#pragma once

#include <stdexcept>

namespace benini {

/// Accuracy request shared by the quadrature, root-finding and maximization
/// routines. `relative` must lie in (0,1); `absolute` is a floor for
/// quantities whose natural scale may be zero.
struct Tolerance {
  double relative = 1e-10;
  double absolute = 1e-12;
  int max_evaluations = 200000;

  Tolerance() = default;
  Tolerance(double rel, double abs, int max_evals = 200000)
      : relative(rel), absolute(abs), max_evaluations(max_evals) {
    validate();
  }

  void validate() const {
    if (!(relative > 0.0 && relative < 1.0))
      throw std::invalid_argument("Tolerance: relative must be in (0, 1)");
    if (!(absolute >= 0.0))
      throw std::invalid_argument("Tolerance: absolute must be >= 0");
    if (max_evaluations <= 0)
      throw std::invalid_argument("Tolerance: max_evaluations must be positive");
  }
};

/// Outcome of a numerical integration. When `converged` is set the error
/// estimate is below max(tol.absolute, tol.relative * |value|); otherwise
/// `value` is the best estimate obtained before the evaluation budget ran out.
struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
  bool converged = false;
};

}  // namespace benini
