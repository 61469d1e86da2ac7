#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "benini/distributions.hpp"
#include "benini/tolerance.hpp"

namespace benini {

/// k-th moment of Ben(beta):
///   mu_k = 1 + k sqrt(pi)/(2 sqrt(beta)) e^{k^2/(4 beta)} (1 + erf(k/(2 sqrt(beta)))).
/// Throws std::overflow_error when e^{k^2/(4 beta)} exceeds double range;
/// use benini_moment_log in that regime.
double benini_moment_closed(int k, double beta);

/// Same moment through the parabolic-cylinder representation
///   mu_k = 1 + k (2 beta)^{-1/2} e^{k^2/(8 beta)} D_{-1}(-k / sqrt(2 beta)).
/// Cross-path check for benini_moment_closed.
double benini_moment_closed_dm1(int k, double beta);

/// ln(mu_k - 1), overflow-free for any k, beta > 0.
double benini_moment_log(int k, double beta);

/// Whether E[X^k] is finite for the given family (analytic test, not
/// numerical): Pareto needs k < alpha; generalized Benini needs a positive
/// coefficient of degree >= 2 (otherwise the Pareto rule applies to a_1);
/// log-Weibull needs a > 1.
bool moment_exists(const AnyParams& params, int k);

/// E[X^k] as the direct integral of x^k f(x) over the support (after the
/// x = lower * e^u substitution). Throws std::domain_error when the moment
/// diverges.
QuadratureResult moment_quadrature(const AnyParams& params, int k,
                                   const Tolerance& tol);

/// E[X^k] through the survival-function form
///   mu_k = s^k + k * integral_s^inf x^{k-1} F-bar(x) dx,  s = support lower end.
QuadratureResult moment_quadrature_survival(const AnyParams& params, int k,
                                            const Tolerance& tol);

struct MomentReport {
  std::string family;
  int k = 0;
  std::optional<double> closed_form;
  QuadratureResult quadrature;
  double discrepancy = 0.0;  // |closed_form - quadrature.value| when both exist
};

/// Closed-form and quadrature moments of Ben(beta) for k = 1..k_max and each
/// beta. betas = (2, 1, 0.5), k_max = 4 reproduces the reference table of
/// lower-order Benini moments.
std::vector<MomentReport> moment_table(std::span<const double> betas, int k_max,
                                       const Tolerance& tol);

/// Log-space partial integrals ln integral_1^M e^{t x} f(x; beta) dx for each
/// truncation point M. The sequence increases without bound in M; this is the
/// numerical face of the m.g.f.'s non-existence.
std::vector<std::pair<double, double>> mgf_divergence_probe(
    double beta, double t, std::span<const double> truncations,
    const Tolerance& tol);

}  // namespace benini
