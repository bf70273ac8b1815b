#pragma once

#include <cstddef>
#include <functional>

namespace vacuum {

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  std::size_t evaluations = 0;
};

struct QuadratureOptions {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  std::size_t max_evaluations = 1'000'000;
};

using Integrand = std::function<double(double)>;

/// Adaptive 15-point Gauss-Kronrod on [a, b]. Intervals are bisected in
/// order of largest error estimate; ties resolve by position, so the result
/// is bitwise reproducible. Stops once the summed error estimate is within
/// max(abs_tol, rel_tol*|value|) or has reached the roundoff floor.
/// Throws ConvergenceError when max_evaluations would be exceeded.
QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureOptions& options = {});

/// Integral over [a, inf) via t = a + s/(1-s), then integrate() on [0, 1).
QuadratureResult integrate_semi_infinite(const Integrand& f, double a,
                                         const QuadratureOptions& options = {});

struct SeriesOptions {
  double rel_tol = 1e-12;
  double abs_tol = 0.0;
  std::size_t max_terms = 100'000;
};

/// sum_{n>=0} term(n), halving term(0) when weight_first is set.
/// tail_bound(N) must bound |sum_{n>N} term(n)|; summation stops at the first
/// N with tail_bound(N) <= max(rel_tol*|partial|, abs_tol). The reported
/// abs_error is that bound plus a compensated-summation rounding allowance.
QuadratureResult sum_series(const std::function<double(std::size_t)>& term, bool weight_first,
                            const std::function<double(std::size_t)>& tail_bound,
                            const SeriesOptions& options = {});

}  // namespace vacuum
