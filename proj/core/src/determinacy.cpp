#include "benini/determinacy.hpp"

#include <cmath>
#include <stdexcept>

#include "benini/moments.hpp"
#include "benini/quadrature.hpp"

namespace benini {

namespace {

constexpr double kSqrtPi = 1.7724538509055160272981674833;

// ln mu_k via the overflow-free ln(mu_k - 1).
double log_moment(int k, double beta) {
  const double lm1 = benini_moment_log(k, beta);
  if (lm1 > 40.0) return lm1;  // log1p(e^{-lm1}) below double resolution
  return lm1 + std::log1p(std::exp(-lm1));
}

// ln of the k-th Carleman term mu_k^{-1/(2k)}.
double log_carleman_term(int k, double beta) {
  return -log_moment(k, beta) / (2.0 * k);
}

}  // namespace

double carleman_partial_sum(double beta, int K) {
  if (K < 1) throw std::invalid_argument("carleman_partial_sum: K must be >= 1");
  if (!(beta > 0.0))
    throw std::invalid_argument("carleman_partial_sum: beta must be > 0");
  double sum = 0.0;
  for (int k = 1; k <= K; ++k) {
    const double lt = log_carleman_term(k, beta);
    if (lt < -690.0) break;  // terms are numerically zero from here on
    sum += std::exp(lt);
  }
  return sum;
}

bool carleman_term_bound_check(double beta, int K) {
  if (K < 1)
    throw std::invalid_argument("carleman_term_bound_check: K must be >= 1");
  for (int k = 1; k <= K; ++k) {
    const double lhs = log_carleman_term(k, beta);
    const double rhs = std::log(2.0 * std::sqrt(beta) / (k * kSqrtPi)) / (2.0 * k) -
                       k / (8.0 * beta);
    if (lhs > rhs + 1e-12) return false;
  }
  return true;
}

KreinTrace krein_integral(const std::function<double(double)>& log_density,
                          double c, std::span<const double> upper_limits,
                          const Tolerance& tol) {
  if (!(c > 0.0)) throw std::invalid_argument("krein_integral: c must be > 0");
  for (std::size_t i = 0; i < upper_limits.size(); ++i) {
    if (upper_limits[i] <= c ||
        (i > 0 && upper_limits[i] <= upper_limits[i - 1]))
      throw std::invalid_argument(
          "krein_integral: upper limits must be ascending and exceed c");
  }

  // In y = ln x the integrand becomes -ln f(e^{2y}) / (2 cosh y), which for
  // every family here decays like (polynomial in y) * e^{-y}.
  auto integrand = [&](double y) {
    return -log_density(std::exp(2.0 * y)) / (2.0 * std::cosh(y));
  };

  // Integrate two orders tighter than the trace-convergence threshold so the
  // quadrature error cannot masquerade as (non-)convergence.
  const Tolerance inner(tol.relative * 0.01, tol.absolute * 0.01,
                        tol.max_evaluations);

  KreinTrace trace;
  double acc = 0.0;
  double prev_y = std::log(c);
  for (double upper : upper_limits) {
    const double y = std::log(upper);
    acc += integrate(integrand, prev_y, y, inner).value;
    prev_y = y;
    trace.values.emplace_back(upper, acc);
  }
  if (trace.values.size() >= 2) {
    const auto& last = trace.values[trace.values.size() - 1];
    const auto& prev = trace.values[trace.values.size() - 2];
    trace.converged = std::abs(last.second - prev.second) <
                      std::max(tol.absolute, tol.relative * std::abs(last.second));
  }
  return trace;
}

ConvexityCheck pakes_convexity_check(double beta,
                                     std::span<const double> grid) {
  if (!(beta > 0.0))
    throw std::invalid_argument("pakes_convexity_check: beta must be > 0");
  for (double x : grid)
    if (!(x > 0.0))
      throw std::invalid_argument("pakes_convexity_check: grid must be > 0");

  auto psi = [beta](double x) { return -std::log(2.0 * beta * x) + x + beta * x * x; };

  ConvexityCheck out;
  out.min_second_difference = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    const double d2 = psi(grid[i - 1]) - 2.0 * psi(grid[i]) + psi(grid[i + 1]);
    out.min_second_difference = std::min(out.min_second_difference, d2);
  }
  out.analytic_ok = true;
  for (double x : grid)
    if (!(1.0 / (x * x) + 2.0 * beta > 0.0)) out.analytic_ok = false;
  return out;
}

CriteriaReport make_criteria_report(const AnyParams& params,
                                    const Tolerance& tol) {
  CriteriaReport report;
  report.family = family_name(params);

  // Families whose moment sequence is not even finite pose no (Stieltjes)
  // moment problem.
  if (!moment_exists(params, 1) || !moment_exists(params, 8)) {
    report.moment_problem_vacuous = true;
    report.justification.push_back(
        "not all moments are finite; the moment problem is vacuous");
    return report;
  }

  const bool is_benini = std::holds_alternative<BeniniParams>(params);
  if (is_benini) {
    const double beta = std::get<BeniniParams>(params).beta;
    for (int K : {1, 2, 5, 10, 20, 50, 200})
      report.carleman_partial_sums.emplace_back(K, carleman_partial_sum(beta, K));
    report.carleman_term_bound_ok = carleman_term_bound_check(beta, 50);
    if (*report.carleman_term_bound_ok)
      report.justification.push_back(
          "Carleman sum converges (term bound holds), so the Carleman "
          "criterion cannot establish determinacy");

    std::vector<double> grid;
    for (int i = 0; i <= 100; ++i) grid.push_back(0.1 + i * (10.0 - 0.1) / 100);
    report.convexity = pakes_convexity_check(beta, grid);
    if (report.convexity->analytic_ok &&
        report.convexity->min_second_difference > 0.0)
      report.justification.push_back(
          "-ln f(e^x) is convex and the Carleman sum is finite (Pakes "
          "condition for indeterminacy)");
  }

  // Krein route, shared by every family with a strictly positive density on
  // [c^2, infinity). c = e for the Benini family; any c with f(c^2) > 0
  // works, and e is safely inside every support here.
  const double c = std::exp(1.0);
  report.krein_lower_limit = c;
  const std::vector<double> uppers = {1e3, 1e6, 1e9, 1e12, 1e15};
  report.krein = krein_integral(
      [&](double x) { return log_pdf(params, x); }, c, uppers,
      Tolerance(tol.relative, 1e-6, tol.max_evaluations));
  if (report.krein.converged)
    report.justification.push_back(
        "Krein logarithmic integral is finite (truncations stabilize), "
        "implying indeterminacy");

  const bool pakes_ok = report.convexity && report.convexity->analytic_ok &&
                        report.convexity->min_second_difference > 0.0 &&
                        report.carleman_term_bound_ok.value_or(false);
  report.indeterminate = report.krein.converged || pakes_ok;
  return report;
}

}  // namespace benini
