#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "vacuum/cutoff.hpp"
#include "vacuum/exact_series.hpp"
#include "vacuum/spectra.hpp"

namespace vacuum {

enum class BracketRoute { NumericFiniteLambda, Extrapolated, AnalyticEM };

std::string_view to_string(BracketRoute route);

/// Continuum-minus-discrete bracket
///   B = int dn J(offset(n)) - sum_n w_n J(offset(n))
/// of a per-mode rho-integral J. lambda == 0 marks a lambda -> 0 limit.
struct BracketResult {
  double value = 0.0;
  double lambda = 0.0;
  double error_estimate = 0.0;
  BracketRoute route = BracketRoute::NumericFiniteLambda;
  /// Set when the regulator produced an oscillating, non-convergent value.
  bool non_convergent = false;
  std::size_t terms = 0;
};

/// Bracket at fixed lambda > 0, computed as 2 int_0^inf f(t) K(t) dt over
/// lattice cells of the remainder kernel. The continuum and discrete parts
/// are combined inside every cell. Terminates once the certified kernel
/// tail bound falls below tol*|partial|. Sharp cutoffs are probed across one
/// lattice period of 1/lambda and flagged when the value oscillates.
BracketResult bracket_finite_lambda(BoundaryKind kind, const CutoffSpec& spec, double tol,
                                    ModeWeight weight = ModeWeight::Tangential);

/// The same bracket summed mode by mode: each J(offset) is a numeric
/// rho-integral, each unit panel contributes int J - (trapezoid or midpoint).
/// Much slower; meant as an independent cross-check at moderate lambda.
BracketResult bracket_mode_sum(BoundaryKind kind, const CutoffSpec& spec, double tol,
                               ModeWeight weight = ModeWeight::Tangential);

struct LambdaSample {
  double lambda = 0.0;
  double bracket = 0.0;
  double error = 0.0;
};

/// Power step p of the small-lambda expansion B0 + c1 lambda^p + c2 lambda^2p.
/// Exponential brackets are even in lambda (p = 2); Gaussian and Sharp are not.
int extrapolation_power(CutoffFamily family);

/// Least-squares fit of B0 + c1 lambda^p + c2 lambda^(2p) (fewer terms when
/// fewer samples) returning B0. error_estimate combines the largest fit
/// residual, the change in B0 when the largest-lambda sample is dropped, and
/// propagated sample errors.
/// Requires >= 3 samples with distinct, positive, strictly decreasing lambda;
/// throws FitError otherwise.
BracketResult extrapolate_to_zero(std::span<const LambdaSample> samples, int power_step = 2);

/// bracket_finite_lambda over a grid followed by extrapolate_to_zero.
/// non_convergent propagates from any sample.
BracketResult extrapolated_bracket(BoundaryKind kind, CutoffFamily family,
                                   std::span<const double> lambda_grid, double tol,
                                   ModeWeight weight = ModeWeight::Tangential);

/// int_0^inf F - sum'_{n>=0} F(n) = (1/12) F'(0) - (1/720) F'''(0), valid when
/// the higher odd derivatives at 0 vanish.
template <class T>
T euler_maclaurin_finite_part(const T& first_derivative, const T& third_derivative) {
  return first_derivative / T(12) - third_derivative / T(720);
}

/// General form: sum_k B_2k/(2k)! F^(2k-1)(0) for F', F''', F^(5), ... (up to F^(9)).
Rational euler_maclaurin_finite_part(std::span<const Rational> odd_derivatives);

/// Renormalized derivatives at n = 0 of F(n) = J(offset(n)), the exact
/// lambda^0 parts of the exponential-regulated mode function.
struct FDerivatives {
  Rational first;
  Rational second;
  Rational third;
  /// F^(4) .. F^(9).
  std::vector<Rational> higher;

  std::vector<Rational> odd() const;
};

FDerivatives f_derivatives(BoundaryKind kind = BoundaryKind::CP,
                           ModeWeight weight = ModeWeight::Tangential);

/// CP decomposition of the bracket:
///   B = -c1/2 + c2 + c3,
///   c1 = J(1/2), c2 = int_{-1/2}^0 J(n + 1/2) dn,
///   c3 = int_0^inf J(n + 1/2) dn - sum'_{n>=0} J(n + 1/2),
/// each replaced by its finite (lambda^0) part.
struct CTerms {
  Rational c1;
  Rational c2;
  Rational c3;

  Rational combination() const { return -c1 / 2 + c2 + c3; }
};

CTerms renormalized_c_terms(ModeWeight weight = ModeWeight::Tangential);

/// Exponential-regulated mode function J(a; lambda) as an exact Laurent series.
LaurentSeries exponential_mode_function(ModeWeight weight, int max_order = 6);

/// lambda -> 0 bracket by the analytic route. CC: Euler-MacLaurin on
/// f_derivatives(CC). CP: renormalized_c_terms().combination().
Rational analytic_bracket(BoundaryKind kind, ModeWeight weight = ModeWeight::Tangential);

BracketResult analytic_bracket_result(BoundaryKind kind,
                                      ModeWeight weight = ModeWeight::Tangential);

}  // namespace vacuum
