#include "benini/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace benini {

double find_root_monotone(const std::function<double(double)>& g, double lo,
                          double hi, const Tolerance& tol) {
  tol.validate();
  if (!(lo <= hi))
    throw std::invalid_argument("find_root_monotone: lo must not exceed hi");

  double flo = g(lo);
  double fhi = g(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (flo * fhi > 0.0)
    throw std::invalid_argument(
        "find_root_monotone: g(lo) and g(hi) do not bracket a root");

  int evals = 2;
  double mid = lo;
  while (evals < tol.max_evaluations) {
    // Secant proposal, clipped into the middle half of the bracket so a flat
    // g cannot stall progress (each step shrinks the bracket by >= 25%).
    double step = fhi - flo;
    double cand = step != 0.0 ? hi - fhi * (hi - lo) / step : 0.5 * (lo + hi);
    const double lo_c = lo + 0.25 * (hi - lo);
    const double hi_c = hi - 0.25 * (hi - lo);
    mid = std::clamp(cand, lo_c, hi_c);

    const double fmid = g(mid);
    ++evals;
    if (fmid == 0.0 || std::abs(fmid) <= tol.absolute) return mid;
    if (flo * fmid < 0.0) {
      hi = mid;
      fhi = fmid;
    } else {
      lo = mid;
      flo = fmid;
    }
    if (hi - lo <= tol.relative * std::abs(mid) +
                       std::numeric_limits<double>::denorm_min())
      return 0.5 * (lo + hi);
  }
  return 0.5 * (lo + hi);
}

namespace {

constexpr double kGolden = 0.6180339887498948482;  // (sqrt 5 - 1)/2

// Golden-section maximization of |f| on [a, b].
double golden_refine(const std::function<double(double)>& f, double a, double b,
                     int iterations, int& evals, double& best_x, double& best_v) {
  double x1 = b - kGolden * (b - a);
  double x2 = a + kGolden * (b - a);
  double f1 = std::abs(f(x1));
  double f2 = std::abs(f(x2));
  evals += 2;
  for (int i = 0; i < iterations; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = std::abs(f(x2));
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = std::abs(f(x1));
    }
    ++evals;
  }
  const double x = f1 > f2 ? x1 : x2;
  const double v = std::max(f1, f2);
  if (v > best_v) {
    best_v = v;
    best_x = x;
  }
  return v;
}

}  // namespace

RayMaximum maximize_abs_on_ray(const std::function<double(double)>& f,
                               double lower, const Tolerance& tol,
                               const RaySearchOptions& opts) {
  tol.validate();
  const bool auto_expand = !(opts.upper > lower) || !std::isfinite(opts.upper);
  const int spd = std::max(8, opts.samples_per_decade);
  const double ratio = std::pow(10.0, 1.0 / spd);

  std::vector<double> xs;
  std::vector<double> vs;
  xs.push_back(lower);
  vs.push_back(std::abs(f(lower)));
  int evals = 1;

  double best = vs[0];
  // Offset grid x = lower + delta * ratio^i; delta well below any scale the
  // integrands here care about.
  double step = 1e-6 * std::max(1.0, std::abs(lower));
  double quiet_decades = 0.0;  // decades since |f| last came near the max
  double x = lower + step;
  while (true) {
    if (!auto_expand && x > opts.upper) break;
    const double v = std::abs(f(x));
    ++evals;
    xs.push_back(x);
    vs.push_back(v);
    if (v > best) best = v;
    if (auto_expand) {
      quiet_decades = v > 1e-12 * best ? 0.0 : quiet_decades + 1.0 / spd;
      if (quiet_decades > 3.0 && x > lower + 1.0) break;
      if (x - lower > 1e15) {
        if (best == 0.0 || !std::isfinite(best))
          throw std::runtime_error(
              "maximize_abs_on_ray: no finite maximum bracketed");
        break;
      }
    }
    if (evals >= tol.max_evaluations) {
      if (best == 0.0 || !std::isfinite(best))
        throw std::runtime_error(
            "maximize_abs_on_ray: evaluation budget exhausted before a "
            "maximum was bracketed");
      break;
    }
    x = lower + (x - lower) * ratio;
  }
  if (!std::isfinite(best))
    throw std::runtime_error("maximize_abs_on_ray: function is unbounded on the grid");

  // Collect grid-local maxima, strongest first.
  std::vector<std::size_t> peaks;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double l = i > 0 ? vs[i - 1] : -1.0;
    const double r = i + 1 < xs.size() ? vs[i + 1] : -1.0;
    if (vs[i] >= l && vs[i] >= r && vs[i] > 0.0) peaks.push_back(i);
  }
  std::sort(peaks.begin(), peaks.end(),
            [&](std::size_t a, std::size_t b) { return vs[a] > vs[b]; });

  double best_x = xs.empty() ? lower : xs[0];
  double best_v = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (vs[i] > best_v) {
      best_v = vs[i];
      best_x = xs[i];
    }

  const int refine = std::max(1, opts.refine_top);
  for (std::size_t p = 0; p < peaks.size() && p < static_cast<std::size_t>(refine); ++p) {
    const std::size_t i = peaks[p];
    const double a = i > 0 ? xs[i - 1] : xs[i];
    const double b = i + 1 < xs.size() ? xs[i + 1] : xs[i];
    if (a < b) golden_refine(f, a, b, 60, evals, best_x, best_v);
  }

  RayMaximum out;
  out.argmax = best_x;
  out.max_value = best_v;
  out.evaluations = evals;
  return out;
}

}  // namespace benini
