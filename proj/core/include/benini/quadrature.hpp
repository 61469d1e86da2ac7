#pragma once

#include <functional>

#include "benini/tolerance.hpp"

namespace benini {

/// Adaptive Gauss-Kronrod (7-15) integration of f over the finite interval
/// [a, b]. Subdivides the worst interval until the global error estimate
/// meets the tolerance or the evaluation budget is exhausted, in which case
/// the result carries converged = false and the best estimate.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const Tolerance& tol);

/// Change of variables mapping t in [0, 1) onto [lower, infinity).
/// The transformed integrand is f(map(t)) * weight(t); whenever f returns
/// exactly 0 the product is taken as 0 even if the weight has overflowed.
struct Substitution {
  std::function<double(double)> map;     // t -> x
  std::function<double(double)> weight;  // t -> dx/dt

  /// x = lower + t/(1-t). General-purpose default.
  static Substitution rational(double lower);

  /// x = lower + u^4 with u = t/(1-t). For integrands of the form
  /// e^{-(x-lower)^{1/4}} sin((x-lower)^{1/4}), which become smooth and
  /// exponentially damped in u.
  static Substitution quartic(double lower);

  /// x = lower * e^u with u = t/(1-t), lower > 0. Turns log-scale
  /// integrands (moments of log-based distributions) into Gaussian-type
  /// integrands without an algebraic tail.
  static Substitution exponential(double lower);
};

/// Integral of f over [lower, infinity) using the rational substitution.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double lower, const Tolerance& tol);

/// Same, with a caller-supplied change of variables.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double lower, const Tolerance& tol,
                                         const Substitution& sub);

}  // namespace benini
