#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "benini/distributions.hpp"
#include "benini/tolerance.hpp"

namespace benini {

/// Partial Carleman sum sum_{k=1}^{K} mu_k^{-1/(2k)} for Ben(beta), evaluated
/// through log-space moments. Terms below 1e-300 are dropped (numerically
/// zero), capping the summation.
double carleman_partial_sum(double beta, int K);

/// Verifies the term bound mu_k^{-1/(2k)} <= (2 sqrt(beta)/(k sqrt(pi)))^{1/(2k)}
/// * e^{-k/(8 beta)} for k = 1..K. This is the exponent form that follows from
/// mu_k >= (k sqrt(pi)/(2 sqrt(beta))) e^{k^2/(4 beta)}.
bool carleman_term_bound_check(double beta, int K);

struct KreinTrace {
  std::vector<std::pair<double, double>> values;  // (upper limit, integral)
  bool converged = false;  // successive values differ by less than tol
};

/// Truncated Krein logarithmic integrals
///   K_S[f](U) = integral_c^U -ln f(x^2) / (1 + x^2) dx
/// for each upper limit, computed incrementally in y = ln x. `log_density`
/// must be the log-pdf of a density strictly positive on [c^2, infinity).
KreinTrace krein_integral(const std::function<double(double)>& log_density,
                          double c, std::span<const double> upper_limits,
                          const Tolerance& tol);

struct ConvexityCheck {
  double min_second_difference = 0.0;
  bool analytic_ok = false;  // psi''(x) = 1/x^2 + 2 beta > 0 at grid points
};

/// Convexity of psi(x) = -ln f(e^x) = -ln(2 beta x) + x + beta x^2 for
/// Ben(beta) on the given grid: discrete second differences plus the exact
/// second derivative.
ConvexityCheck pakes_convexity_check(double beta, std::span<const double> grid);

struct CriteriaReport {
  std::string family;
  // (K, partial sum); only filled for the Benini family, where closed-form
  // moments make the sum cheap.
  std::vector<std::pair<int, double>> carleman_partial_sums;
  std::optional<bool> carleman_term_bound_ok;
  KreinTrace krein;
  std::optional<ConvexityCheck> convexity;
  double krein_lower_limit = 0.0;

  // "indeterminate" is a criterion-based conclusion, not a proof; the
  // justification records which hypothesis each flag rests on. "vacuous"
  // marks families where not all moments exist, so the (Stieltjes) moment
  // problem does not arise.
  bool moment_problem_vacuous = false;
  bool indeterminate = false;
  std::vector<std::string> justification;
};

/// Assembles the three criteria for one family: Carleman (inconclusive by
/// the term bound), Krein finiteness, and convexity of -ln f(e^x).
CriteriaReport make_criteria_report(const AnyParams& params,
                                    const Tolerance& tol);

}  // namespace benini
