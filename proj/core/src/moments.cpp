#include "benini/moments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "benini/quadrature.hpp"
#include "benini/special_functions.hpp"

namespace benini {

namespace {

constexpr double kSqrtPi = 1.7724538509055160272981674833;

void check_moment_args(int k, double beta) {
  if (k < 1) throw std::invalid_argument("benini moment: k must be >= 1");
  if (!(beta > 0.0)) throw std::invalid_argument("benini moment: beta must be > 0");
}

}  // namespace

double benini_moment_closed(int k, double beta) {
  check_moment_args(k, beta);
  const double t = k / (2.0 * std::sqrt(beta));
  if (t * t > 705.0)
    throw std::overflow_error(
        "benini_moment_closed: e^{k^2/(4 beta)} exceeds double range; use "
        "benini_moment_log");
  return 1.0 + t * kSqrtPi * std::exp(t * t) * (1.0 + erf(t));
}

double benini_moment_closed_dm1(int k, double beta) {
  check_moment_args(k, beta);
  const double s = std::sqrt(2.0 * beta);
  const double e = k * double(k) / (8.0 * beta);
  if (2.0 * e > 705.0)
    throw std::overflow_error(
        "benini_moment_closed_dm1: e^{k^2/(8 beta)} D_{-1} exceeds double range");
  return 1.0 + k / s * std::exp(e) * parabolic_cylinder_dm1(-k / s);
}

double benini_moment_log(int k, double beta) {
  check_moment_args(k, beta);
  const double t = k / (2.0 * std::sqrt(beta));
  // ln(mu_k - 1) = ln k + ln(sqrt(pi)/(2 sqrt(beta))) + t^2 + ln(1 + erf t).
  return std::log(double(k)) + std::log(kSqrtPi / (2.0 * std::sqrt(beta))) +
         t * t + std::log1p(erf(t));
}

namespace {

struct MomentExistsVisitor {
  int k;
  bool operator()(const ParetoParams& p) const { return double(k) < p.alpha; }
  bool operator()(const BeniniParams&) const { return true; }
  bool operator()(const BeniniThreeParams& p) const {
    return p.beta > 0.0 || double(k) < p.alpha;
  }
  bool operator()(const GenBeniniParams& p) const {
    for (std::size_t j = 1; j < p.coeffs.size(); ++j)
      if (p.coeffs[j] > 0.0) return true;
    return double(k) < p.coeffs[0];  // pure Pareto term
  }
  bool operator()(const LogWeibullParams& p) const { return p.a > 1.0; }
};

}  // namespace

bool moment_exists(const AnyParams& params, int k) {
  if (k < 1) throw std::invalid_argument("moment_exists: k must be >= 1");
  return std::visit(MomentExistsVisitor{k}, params);
}

QuadratureResult moment_quadrature(const AnyParams& params, int k,
                                   const Tolerance& tol) {
  if (!moment_exists(params, k))
    throw std::domain_error("moment_quadrature: E[X^" + std::to_string(k) +
                            "] diverges for " + family_name(params));
  const double s = support_lower(params);
  auto integrand = [&](double x) {
    const double lp = log_pdf(params, x);
    if (lp == -std::numeric_limits<double>::infinity()) return 0.0;
    return std::exp(k * std::log(x) + lp);
  };
  return integrate_semi_infinite(integrand, s, tol, Substitution::exponential(s));
}

QuadratureResult moment_quadrature_survival(const AnyParams& params, int k,
                                            const Tolerance& tol) {
  if (!moment_exists(params, k))
    throw std::domain_error("moment_quadrature_survival: E[X^" +
                            std::to_string(k) + "] diverges for " +
                            family_name(params));
  const double s = support_lower(params);
  auto integrand = [&](double x) {
    const double sv = sf(params, x);
    if (sv == 0.0) return 0.0;
    return k * std::exp((k - 1) * std::log(x)) * sv;
  };
  QuadratureResult r =
      integrate_semi_infinite(integrand, s, tol, Substitution::exponential(s));
  r.value += std::pow(s, k);  // integral over [0, s), where F-bar = 1
  return r;
}

std::vector<MomentReport> moment_table(std::span<const double> betas, int k_max,
                                       const Tolerance& tol) {
  if (k_max < 1) throw std::invalid_argument("moment_table: k_max must be >= 1");
  std::vector<MomentReport> rows;
  rows.reserve(betas.size() * std::size_t(k_max));
  for (double beta : betas) {
    const BeniniParams params(beta);
    for (int k = 1; k <= k_max; ++k) {
      MomentReport row;
      row.family = "benini(beta=" + std::to_string(beta) + ")";
      row.k = k;
      row.closed_form = benini_moment_closed(k, beta);
      row.quadrature = moment_quadrature(AnyParams(params), k, tol);
      row.discrepancy = std::abs(*row.closed_form - row.quadrature.value);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<std::pair<double, double>> mgf_divergence_probe(
    double beta, double t, std::span<const double> truncations,
    const Tolerance& tol) {
  if (!(t > 0.0))
    throw std::invalid_argument("mgf_divergence_probe: t must be > 0");
  const BeniniParams params(beta);
  for (std::size_t i = 0; i < truncations.size(); ++i) {
    if (truncations[i] < 1.0 || (i > 0 && truncations[i] <= truncations[i - 1]))
      throw std::invalid_argument(
          "mgf_divergence_probe: truncations must be ascending and >= 1");
  }

  // ln of the integrand t x + ln f(x); increasing toward x = M once the
  // linear term dominates, so the integral concentrates near its upper end.
  auto log_h = [&](double x) { return t * x + log_pdf(params, x); };

  std::vector<std::pair<double, double>> out;
  out.reserve(truncations.size());
  for (double M : truncations) {
    // Locate the maximum of log_h on [1, M] on a grid (it sits at M for all
    // but tiny M).
    double gm = log_h(M);
    const int grid = 512;
    for (int i = 0; i <= grid; ++i) {
      const double x = 1.0 + (M - 1.0) * i / grid;
      gm = std::max(gm, log_h(x));
    }
    // Everything below gm - 80 is invisible at double precision.
    const double lo = std::max(1.0, M - 100.0 / t);
    QuadratureResult peak = integrate(
        [&](double x) { return std::exp(log_h(x) - gm); }, lo, M, tol);
    double body = 0.0;
    if (lo > 1.0)
      body = integrate([&](double x) { return std::exp(log_h(x) - gm); }, 1.0,
                       lo, tol)
                 .value;
    out.emplace_back(M, gm + std::log(peak.value + body));
  }
  return out;
}

}  // namespace benini
