#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace benini {

struct Dataset {
  std::vector<double> observations;  // all > 0
  std::string name;
};

/// CSV parse failure carrying the 1-based line number.
class CsvError : public std::runtime_error {
 public:
  CsvError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Loads a single-column CSV of positive values. An optional header row
/// "income" is skipped; blank lines are ignored; non-numeric or non-positive
/// entries raise CsvError with the offending line number.
Dataset load_csv(const std::filesystem::path& path);

/// Pairs (ln x_(i), ln(1 - i/n)) for the order statistics x_(1) <= ... ,
/// i = 1..n-1; the final point, where the empirical survival is zero, is
/// dropped. Requires n >= 2.
std::vector<std::pair<double, double>> empirical_log_survival(
    const Dataset& data);

struct FitResult {
  std::string model;  // "pareto", "benini2", "genbenini-k"
  // a_0..a_k in the sign convention ln F-bar = a_0 - a_1 ln x - ... - a_k (ln x)^k.
  std::vector<double> coefficients;
  double rss = 0.0;
  std::size_t n = 0;
  // Least squares is unconstrained; this flags whether a_j >= 0 holds for
  // all j >= 1 (the family's own sign constraints).
  bool sign_feasible = true;
};

/// Least-squares fit of the degree-k polynomial in ln x to the empirical log
/// survival. k = 1 is the Pareto line, k = 2 the Benini parabola. Throws
/// std::invalid_argument when n <= k + 1 and std::runtime_error when the
/// design matrix is rank-deficient.
FitResult fit_log_survival_polynomial(const Dataset& data, int degree);

/// Maximum likelihood for Ben(beta, sigma): sigma-hat = min x,
/// beta-hat = n / sum (ln(x_i/sigma-hat))^2, from the fact that
/// (ln(X/sigma))^2 is exponential with rate beta. Throws std::runtime_error
/// when all observations coincide.
std::pair<double, double> mle_benini2(const Dataset& data);

}  // namespace benini
