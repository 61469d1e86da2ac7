#include "benini/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "benini/optimize.hpp"

namespace benini {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

// sum_j a_j y^j and its derivative, j = 1..k (Horner).
double gen_poly(const std::vector<double>& a, double y) {
  double s = 0.0;
  for (std::size_t j = a.size(); j-- > 0;) s = s * y + a[j];
  return s * y;
}

double gen_poly_derivative(const std::vector<double>& a, double y) {
  double s = 0.0;
  for (std::size_t j = a.size(); j-- > 0;) s = s * y + (double(j) + 1.0) * a[j];
  return s;
}

}  // namespace

ParetoParams::ParetoParams(double alpha_, double sigma_)
    : alpha(alpha_), sigma(sigma_) {
  require(alpha > 0.0 && std::isfinite(alpha), "pareto: alpha must be > 0");
  require(sigma > 0.0 && std::isfinite(sigma), "pareto: sigma must be > 0");
}

BeniniParams::BeniniParams(double beta_, double sigma_)
    : beta(beta_), sigma(sigma_) {
  require(beta > 0.0 && std::isfinite(beta), "benini: beta must be > 0");
  require(sigma > 0.0 && std::isfinite(sigma), "benini: sigma must be > 0");
}

BeniniThreeParams::BeniniThreeParams(double alpha_, double beta_, double sigma_)
    : alpha(alpha_), beta(beta_), sigma(sigma_) {
  require(alpha >= 0.0 && std::isfinite(alpha), "benini3: alpha must be >= 0");
  require(beta >= 0.0 && std::isfinite(beta), "benini3: beta must be >= 0");
  require(alpha > 0.0 || beta > 0.0, "benini3: (alpha, beta) must not be (0, 0)");
  require(sigma > 0.0 && std::isfinite(sigma), "benini3: sigma must be > 0");
}

GenBeniniParams::GenBeniniParams(std::vector<double> coeffs_)
    : coeffs(std::move(coeffs_)) {
  require(!coeffs.empty(), "genbenini: needs at least one coefficient");
  bool any = false;
  for (double a : coeffs) {
    require(a >= 0.0 && std::isfinite(a), "genbenini: coefficients must be >= 0");
    any = any || a > 0.0;
  }
  require(any, "genbenini: at least one coefficient must be > 0");
}

LogWeibullParams::LogWeibullParams(double a_) : a(a_) {
  require(a > 0.0 && std::isfinite(a), "logweibull: a must be > 0");
}

double support_lower(const ParetoParams& p) { return p.sigma; }
double support_lower(const BeniniParams& p) { return p.sigma; }
double support_lower(const BeniniThreeParams& p) { return p.sigma; }
double support_lower(const GenBeniniParams&) { return 1.0; }
double support_lower(const LogWeibullParams&) { return 1.0; }

// --- cdf / sf ---------------------------------------------------------------

double sf(const ParetoParams& p, double x) {
  if (x <= p.sigma) return 1.0;
  return std::exp(-p.alpha * std::log(x / p.sigma));
}

double sf(const BeniniParams& p, double x) {
  if (x <= p.sigma) return 1.0;
  const double y = std::log(x / p.sigma);
  return std::exp(-p.beta * y * y);
}

double sf(const BeniniThreeParams& p, double x) {
  if (x <= p.sigma) return 1.0;
  const double y = std::log(x / p.sigma);
  return std::exp(-(p.alpha + p.beta * y) * y);
}

double sf(const GenBeniniParams& p, double x) {
  if (x <= 1.0) return 1.0;
  return std::exp(-gen_poly(p.coeffs, std::log(x)));
}

double sf(const LogWeibullParams& p, double x) {
  if (x <= 1.0) return 1.0;
  return std::exp(-std::pow(std::log(x), p.a));
}

namespace {
// 1 - e^{-h} without cancellation for small h.
double cdf_from_hazard(double h) { return -std::expm1(-h); }
}  // namespace

double cdf(const ParetoParams& p, double x) {
  if (x <= p.sigma) return 0.0;
  return cdf_from_hazard(p.alpha * std::log(x / p.sigma));
}

double cdf(const BeniniParams& p, double x) {
  if (x <= p.sigma) return 0.0;
  const double y = std::log(x / p.sigma);
  return cdf_from_hazard(p.beta * y * y);
}

double cdf(const BeniniThreeParams& p, double x) {
  if (x <= p.sigma) return 0.0;
  const double y = std::log(x / p.sigma);
  return cdf_from_hazard((p.alpha + p.beta * y) * y);
}

double cdf(const GenBeniniParams& p, double x) {
  if (x <= 1.0) return 0.0;
  return cdf_from_hazard(gen_poly(p.coeffs, std::log(x)));
}

double cdf(const LogWeibullParams& p, double x) {
  if (x <= 1.0) return 0.0;
  return cdf_from_hazard(std::pow(std::log(x), p.a));
}

// --- log_pdf / pdf ----------------------------------------------------------

double log_pdf(const ParetoParams& p, double x) {
  if (x < p.sigma) return -kInf;
  return std::log(p.alpha) + p.alpha * std::log(p.sigma) -
         (p.alpha + 1.0) * std::log(x);
}

double log_pdf(const BeniniParams& p, double x) {
  if (x <= p.sigma) return -kInf;  // density vanishes at the endpoint
  const double y = std::log(x / p.sigma);
  return std::log(2.0 * p.beta * y) - std::log(x) - p.beta * y * y;
}

double log_pdf(const BeniniThreeParams& p, double x) {
  if (x < p.sigma) return -kInf;
  const double y = std::log(x / p.sigma);
  const double slope = p.alpha + 2.0 * p.beta * y;
  if (slope <= 0.0) return -kInf;  // only at y = 0 with alpha = 0
  return std::log(slope) - std::log(x) - (p.alpha + p.beta * y) * y;
}

double log_pdf(const GenBeniniParams& p, double x) {
  if (x < 1.0) return -kInf;
  const double y = std::log(x);
  const double slope = gen_poly_derivative(p.coeffs, y);
  if (slope <= 0.0) return -kInf;
  return std::log(slope) - std::log(x) - gen_poly(p.coeffs, y);
}

double log_pdf(const LogWeibullParams& p, double x) {
  if (x < 1.0) return -kInf;
  const double y = std::log(x);
  if (p.a == 1.0) return -y - std::log(x);  // Pareto(1) case, finite at y = 0
  if (y == 0.0) return p.a > 1.0 ? -kInf : kInf;
  return std::log(p.a) + (p.a - 1.0) * std::log(y) - std::pow(y, p.a) -
         std::log(x);
}

double pdf(const ParetoParams& p, double x) { return x < p.sigma ? 0.0 : std::exp(log_pdf(p, x)); }
double pdf(const BeniniParams& p, double x) { return x <= p.sigma ? 0.0 : std::exp(log_pdf(p, x)); }
double pdf(const BeniniThreeParams& p, double x) { return x < p.sigma ? 0.0 : std::exp(log_pdf(p, x)); }
double pdf(const GenBeniniParams& p, double x) { return x < 1.0 ? 0.0 : std::exp(log_pdf(p, x)); }
double pdf(const LogWeibullParams& p, double x) { return x < 1.0 ? 0.0 : std::exp(log_pdf(p, x)); }

// --- quantile ---------------------------------------------------------------

namespace {
double check_u(double u) {
  if (!(u >= 0.0 && u < 1.0))
    throw std::domain_error("quantile: u must lie in [0, 1)");
  return -std::log1p(-u);  // -ln(1-u), exact at u = 0
}
}  // namespace

double quantile(const ParetoParams& p, double u) {
  const double L = check_u(u);
  return p.sigma * std::exp(L / p.alpha);
}

double quantile(const BeniniParams& p, double u) {
  const double L = check_u(u);
  return p.sigma * std::exp(std::sqrt(L / p.beta));
}

double quantile(const BeniniThreeParams& p, double u) {
  const double L = check_u(u);
  if (L == 0.0) return p.sigma;
  // Positive root of beta y^2 + alpha y - L = 0 in the cancellation-free
  // arrangement y = 2L / (alpha + sqrt(alpha^2 + 4 beta L)); beta = 0 gives
  // the Pareto value L/alpha.
  const double y = 2.0 * L / (p.alpha + std::sqrt(p.alpha * p.alpha + 4.0 * p.beta * L));
  return p.sigma * std::exp(y);
}

double quantile(const GenBeniniParams& p, double u) {
  const double L = check_u(u);
  if (L == 0.0) return 1.0;
  // sum_j a_j y^j is strictly increasing on y >= 0; expand a bracket, then
  // bisection/secant.
  double hi = 1.0;
  while (gen_poly(p.coeffs, hi) < L) {
    hi *= 2.0;
    if (hi > 1e9)
      throw std::runtime_error("genbenini quantile: bracket expansion failed");
  }
  const double y = find_root_monotone(
      [&](double t) { return gen_poly(p.coeffs, t) - L; }, 0.0, hi,
      Tolerance(1e-15, 0.0, 200));
  return std::exp(y);
}

double quantile(const LogWeibullParams& p, double u) {
  const double L = check_u(u);
  return std::exp(std::pow(L, 1.0 / p.a));
}

// --- variant dispatch -------------------------------------------------------

double support_lower(const AnyParams& p) {
  return std::visit([](const auto& q) { return support_lower(q); }, p);
}
double cdf(const AnyParams& p, double x) {
  return std::visit([x](const auto& q) { return cdf(q, x); }, p);
}
double sf(const AnyParams& p, double x) {
  return std::visit([x](const auto& q) { return sf(q, x); }, p);
}
double pdf(const AnyParams& p, double x) {
  return std::visit([x](const auto& q) { return pdf(q, x); }, p);
}
double log_pdf(const AnyParams& p, double x) {
  return std::visit([x](const auto& q) { return log_pdf(q, x); }, p);
}
double quantile(const AnyParams& p, double u) {
  return std::visit([u](const auto& q) { return quantile(q, u); }, p);
}

namespace {
struct FamilyNameVisitor {
  std::string operator()(const ParetoParams&) const { return "pareto"; }
  std::string operator()(const BeniniParams&) const { return "benini"; }
  std::string operator()(const BeniniThreeParams&) const { return "benini3"; }
  std::string operator()(const GenBeniniParams&) const { return "genbenini"; }
  std::string operator()(const LogWeibullParams&) const { return "logweibull"; }
};
}  // namespace

std::string family_name(const AnyParams& p) {
  return std::visit(FamilyNameVisitor{}, p);
}

// --- sampling ---------------------------------------------------------------

double Sampler::operator()() {
  // 53-bit uniform in [0, 1); bit-identical across standard libraries.
  const double u = double(engine_() >> 11) * 0x1.0p-53;
  return quantile(params_, u);
}

std::vector<double> sample(const AnyParams& params, std::size_t n,
                           std::uint64_t seed) {
  Sampler s(params, seed);
  std::vector<double> out(n);
  for (double& v : out) v = s();
  return out;
}

bool stochastically_dominates(double beta1, double beta2,
                              std::span<const double> grid) {
  const BeniniParams p1(beta1);
  const BeniniParams p2(beta2);
  for (double x : grid)
    if (!(cdf(p1, x) <= cdf(p2, x))) return false;
  return true;
}

}  // namespace benini
