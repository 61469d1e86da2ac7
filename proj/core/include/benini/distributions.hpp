#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace benini {

// Parameter records. Each constructor validates its invariants and throws
// std::invalid_argument naming the violated one.

/// Pareto: F(x) = 1 - (x/sigma)^{-alpha}, x >= sigma.
struct ParetoParams {
  double alpha;
  double sigma;
  explicit ParetoParams(double alpha, double sigma = 1.0);
};

/// Two-parameter Benini: F(x) = 1 - exp{-beta (ln x/sigma)^2}, x >= sigma.
struct BeniniParams {
  double beta;
  double sigma;
  explicit BeniniParams(double beta, double sigma = 1.0);
};

/// Three-parameter Benini:
/// F(x) = 1 - exp{-alpha ln(x/sigma) - beta (ln x/sigma)^2}, x >= sigma,
/// with alpha, beta >= 0 and (alpha, beta) != (0, 0).
struct BeniniThreeParams {
  double alpha;
  double beta;
  double sigma;
  BeniniThreeParams(double alpha, double beta, double sigma = 1.0);
};

/// Generalized Benini: F(x) = 1 - exp{-sum_j a_j (ln x)^j}, x >= 1,
/// a_1..a_k >= 0 with at least one positive.
struct GenBeniniParams {
  std::vector<double> coeffs;  // a_1 .. a_k
  explicit GenBeniniParams(std::vector<double> coeffs);
  int degree() const { return static_cast<int>(coeffs.size()); }
};

/// Log-Weibull: F(x) = 1 - exp{-(ln x)^a}, x >= 1, a > 0. a = 2 is Ben(1).
struct LogWeibullParams {
  double a;
  explicit LogWeibullParams(double a);
};

double support_lower(const ParetoParams& p);
double support_lower(const BeniniParams& p);
double support_lower(const BeniniThreeParams& p);
double support_lower(const GenBeniniParams& p);
double support_lower(const LogWeibullParams& p);

// cdf maps x below the support to 0; sf is its exact complement as computed.
double cdf(const ParetoParams& p, double x);
double cdf(const BeniniParams& p, double x);
double cdf(const BeniniThreeParams& p, double x);
double cdf(const GenBeniniParams& p, double x);
double cdf(const LogWeibullParams& p, double x);

double sf(const ParetoParams& p, double x);
double sf(const BeniniParams& p, double x);
double sf(const BeniniThreeParams& p, double x);
double sf(const GenBeniniParams& p, double x);
double sf(const LogWeibullParams& p, double x);

// log_pdf returns -infinity outside the support; pdf = exp(log_pdf), so the
// far tail underflows cleanly instead of evaluating exp{-beta (ln x)^2}
// prematurely.
double log_pdf(const ParetoParams& p, double x);
double log_pdf(const BeniniParams& p, double x);
double log_pdf(const BeniniThreeParams& p, double x);
double log_pdf(const GenBeniniParams& p, double x);
double log_pdf(const LogWeibullParams& p, double x);

double pdf(const ParetoParams& p, double x);
double pdf(const BeniniParams& p, double x);
double pdf(const BeniniThreeParams& p, double x);
double pdf(const GenBeniniParams& p, double x);
double pdf(const LogWeibullParams& p, double x);

// quantile is defined on u in [0, 1); u = 1 has no finite preimage.
// Throws std::domain_error outside that range.
double quantile(const ParetoParams& p, double u);
double quantile(const BeniniParams& p, double u);
double quantile(const BeniniThreeParams& p, double u);
double quantile(const GenBeniniParams& p, double u);
double quantile(const LogWeibullParams& p, double u);

using AnyParams = std::variant<ParetoParams, BeniniParams, BeniniThreeParams,
                               GenBeniniParams, LogWeibullParams>;

double support_lower(const AnyParams& p);
double cdf(const AnyParams& p, double x);
double sf(const AnyParams& p, double x);
double pdf(const AnyParams& p, double x);
double log_pdf(const AnyParams& p, double x);
double quantile(const AnyParams& p, double u);
std::string family_name(const AnyParams& p);

/// Inverse-transform sampler. Owns its generator state; a single instance
/// must not be shared across threads.
class Sampler {
 public:
  Sampler(AnyParams params, std::uint64_t seed)
      : params_(std::move(params)), engine_(seed) {}

  double operator()();

 private:
  AnyParams params_;
  std::mt19937_64 engine_;
};

/// n i.i.d. variates by inverse transform; bit-identical for a fixed seed.
std::vector<double> sample(const AnyParams& params, std::size_t n,
                           std::uint64_t seed);

/// True iff F(x; beta1) <= F(x; beta2) at every grid point (x >= 1), which
/// for the Benini family is equivalent to beta1 <= beta2.
bool stochastically_dominates(double beta1, double beta2,
                              std::span<const double> grid);

}  // namespace benini
