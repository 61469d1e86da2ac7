#pragma once

#include <functional>

#include "benini/tolerance.hpp"

namespace benini {

/// Root of a continuous, strictly monotone g on [lo, hi]. Requires
/// g(lo) * g(hi) <= 0; throws std::invalid_argument otherwise.
/// Stops when |g(root)| <= tol.absolute or the bracket width falls below
/// tol.relative * |root|.
double find_root_monotone(const std::function<double(double)>& g, double lo,
                          double hi, const Tolerance& tol);

struct RayMaximum {
  double argmax = 0.0;
  double max_value = 0.0;  // max of |f|
  int evaluations = 0;
};

struct RaySearchOptions {
  /// Upper end of the search window. The caller is responsible for choosing
  /// it large enough that |f| is known (e.g. from a decay bound) to stay
  /// below the maximum beyond it. Non-finite means auto-expand until |f|
  /// has fallen far below the running maximum for several decades.
  double upper = 0.0;
  /// Grid density of the scan, counted per decade of (x - lower).
  int samples_per_decade = 256;
  /// How many grid-local maxima get golden-section refinement.
  int refine_top = 50;
};

/// Maximum of |f| over the ray [lower, infinity) for continuous f vanishing
/// at infinity: geometric grid scan followed by golden-section refinement of
/// the leading local maxima. Throws std::runtime_error when no finite
/// maximum is bracketed within the evaluation budget.
RayMaximum maximize_abs_on_ray(const std::function<double(double)>& f,
                               double lower, const Tolerance& tol,
                               const RaySearchOptions& opts = {});

}  // namespace benini
