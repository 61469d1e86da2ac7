#pragma once

namespace benini {

/// Error function. Odd, erf(x) in [-1, 1], absolute accuracy <= 1e-15.
double erf(double x);

/// Complementary error function, 1 - erf(x), without cancellation for large
/// positive arguments (relative accuracy holds well past x = 25).
double erfc(double x);

/// Scaled complementary error function e^{x^2} erfc(x). Needed wherever
/// erfc underflows but the exponential prefactor is large.
double erfcx(double x);

/// Parabolic cylinder function D_{-1}(x) = sqrt(pi/2) e^{x^2/4} erfc(x/sqrt 2).
/// Throws std::overflow_error when the value exceeds double range
/// (strongly negative x).
double parabolic_cylinder_dm1(double x);

/// ln Gamma(x) for x > 0. Throws std::domain_error otherwise.
double log_gamma(double x);

}  // namespace benini
