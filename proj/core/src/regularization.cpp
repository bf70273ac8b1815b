#include "vacuum/regularization.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "vacuum/errors.hpp"
#include "vacuum/quadrature.hpp"

namespace vacuum {

std::string_view to_string(BracketRoute route) {
  switch (route) {
    case BracketRoute::NumericFiniteLambda:
      return "numeric";
    case BracketRoute::Extrapolated:
      return "extrapolated";
    case BracketRoute::AnalyticEM:
      return "analytic";
  }
  return "unknown";
}

namespace {

constexpr double kCellTolerance = 1e-13;

void require_tolerance(double tol, const char* who) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw DomainError(std::string(who) + ": tolerance must be finite and positive");
  }
}

// Lattice cells of the remainder kernel: CC [i, i+1]; CP [0, 1/2] then
// [i - 1/2, i + 1/2].
double cell_edge(BoundaryKind kind, std::size_t i) {
  const auto x = static_cast<double>(i);
  if (kind == BoundaryKind::CC) return x;
  return i == 0 ? 0.0 : x - 0.5;
}

BracketResult kernel_bracket(BoundaryKind kind, const CutoffSpec& spec, double tol,
                             ModeWeight weight) {
  const double support = support_end(spec);
  const KernelBound bound = remainder_kernel_bound(weight);
  double cell_error = 0.0;

  auto integrand = [&](double t) { return evaluate(spec, t) * remainder_kernel(kind, weight, t); };

  auto term = [&](std::size_t i) {
    const double lo = cell_edge(kind, i);
    const double hi = std::min(cell_edge(kind, i + 1), support);
    if (!(hi > lo)) return 0.0;
    const auto cell = integrate(integrand, lo, hi, {kCellTolerance, 0.0, 1'000'000});
    cell_error += 2.0 * cell.abs_error;
    return 2.0 * cell.value;
  };

  auto tail = [&](std::size_t i) {
    const double from = cell_edge(kind, i + 1);
    return 2.0 * (bound.c0 * moment_tail(spec, 0, from) + bound.c1 * moment_tail(spec, 1, from) +
                  bound.c2 * moment_tail(spec, 2, from));
  };

  const auto sum = sum_series(term, false, tail,
                              {tol, std::numeric_limits<double>::min(), 100'000});
  BracketResult result;
  result.value = sum.value;
  result.lambda = spec.lambda;
  result.error_estimate = sum.abs_error + cell_error;
  result.route = BracketRoute::NumericFiniteLambda;
  result.terms = sum.evaluations;
  return result;
}

// A smooth regulator gives a bracket that is monotone in lambda; a sharp edge
// sweeping through the lattice makes it swing with period 1 in 1/lambda. The
// probe window spans 1.5 periods so it always straddles two extrema.
bool oscillates_over_period(BoundaryKind kind, const CutoffSpec& spec, double tol,
                            ModeWeight weight, double centre_value) {
  constexpr int kProbes = 12;
  constexpr double kSpacing = 1.0 / 8.0;
  const double edge = 1.0 / spec.lambda;
  std::array<double, kProbes + 1> values{};
  values[0] = centre_value;
  double scale = std::abs(centre_value);
  for (int j = 1; j <= kProbes; ++j) {
    const CutoffSpec probe{spec.family, 1.0 / (edge + kSpacing * j)};
    values[j] = kernel_bracket(kind, probe, tol, weight).value;
    scale = std::max(scale, std::abs(values[j]));
  }
  const double noise = 1e3 * std::numeric_limits<double>::epsilon() * std::max(scale, 1.0);
  int reversals = 0;
  int last_sign = 0;
  for (int j = 1; j <= kProbes; ++j) {
    const double step = values[j] - values[j - 1];
    if (std::abs(step) <= noise) continue;
    const int sign = step > 0.0 ? 1 : -1;
    if (last_sign != 0 && sign != last_sign) ++reversals;
    last_sign = sign;
  }
  return reversals >= 2;
}

struct FitOutcome {
  double intercept = 0.0;
  double max_residual = 0.0;
  double propagated = 0.0;
};

FitOutcome least_squares_intercept(std::span<const LambdaSample> samples, int power_step,
                                   int parameters) {
  const auto n = static_cast<Eigen::Index>(samples.size());
  const double scale = samples.front().lambda;
  Eigen::MatrixXd design(n, parameters);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double x = std::pow(samples[static_cast<std::size_t>(i)].lambda / scale, power_step);
    double column = 1.0;
    for (int j = 0; j < parameters; ++j) {
      design(i, j) = column;
      column *= x;
    }
    rhs(i) = samples[static_cast<std::size_t>(i)].bracket;
  }

  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> decomposition(design);
  if (decomposition.rank() < parameters) {
    throw FitError("extrapolate_to_zero: sample set is degenerate for the fit model");
  }
  const Eigen::VectorXd coefficients = decomposition.solve(rhs);
  const Eigen::MatrixXd pseudo_inverse = decomposition.pseudoInverse();

  FitOutcome outcome;
  outcome.intercept = coefficients(0);
  outcome.max_residual = (design * coefficients - rhs).cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < n; ++i) {
    outcome.propagated +=
        std::abs(pseudo_inverse(0, i)) * samples[static_cast<std::size_t>(i)].error;
  }
  return outcome;
}

// sum_k B_2k / (2k)! for k = 1..5.
const std::array<Rational, 5>& euler_maclaurin_coefficients() {
  static const std::array<Rational, 5> coefficients = {
      Rational(1, 12), Rational(-1, 720), Rational(1, 30240), Rational(-1, 1209600),
      Rational(1, 47900160)};
  return coefficients;
}

Rational offset_of_first_mode(BoundaryKind kind) {
  return kind == BoundaryKind::CC ? Rational(0) : Rational(1, 2);
}

}  // namespace

BracketResult bracket_finite_lambda(BoundaryKind kind, const CutoffSpec& spec, double tol,
                                    ModeWeight weight) {
  validate(spec);
  require_tolerance(tol, "bracket_finite_lambda");
  BracketResult result = kernel_bracket(kind, spec, tol, weight);
  if (spec.family == CutoffFamily::Sharp) {
    result.non_convergent = oscillates_over_period(kind, spec, tol, weight, result.value);
  }
  return result;
}

BracketResult bracket_mode_sum(BoundaryKind kind, const CutoffSpec& spec, double tol,
                               ModeWeight weight) {
  validate(spec);
  require_tolerance(tol, "bracket_mode_sum");
  double inner_error = 0.0;

  auto mode = [&](double a) {
    const auto r = rho_integral_numeric(a, spec, kCellTolerance, weight);
    return r.value;
  };

  auto panel = [&](std::size_t n) {
    const auto lo = static_cast<double>(n);
    const auto continuum = integrate(mode, lo, lo + 1.0, {1e-11, 0.0, 1'000'000});
    inner_error += continuum.abs_error;
    const double discrete = kind == BoundaryKind::CC ? 0.5 * (mode(lo) + mode(lo + 1.0))
                                                     : mode(lo + 0.5);
    return continuum.value - discrete;
  };

  // Beyond panel N both the continuum and the discrete remainders are
  // non-negative and bounded by int_N^inf J_energy <= 2 int_N^inf t^3 f.
  auto tail = [&](std::size_t n) {
    return 2.0 * moment_tail(spec, 3, static_cast<double>(n + 1));
  };

  const auto sum = sum_series(panel, false, tail, {tol, std::numeric_limits<double>::min(), 100'000});
  BracketResult result;
  result.value = sum.value;
  result.lambda = spec.lambda;
  result.error_estimate = sum.abs_error + inner_error;
  result.route = BracketRoute::NumericFiniteLambda;
  result.terms = sum.evaluations;
  return result;
}

int extrapolation_power(CutoffFamily family) {
  return family == CutoffFamily::Exponential ? 2 : 1;
}

BracketResult extrapolate_to_zero(std::span<const LambdaSample> samples, int power_step) {
  if (samples.size() < 3) {
    throw FitError("extrapolate_to_zero: need at least 3 samples, got " +
                   std::to_string(samples.size()));
  }
  if (power_step < 1) throw FitError("extrapolate_to_zero: power step must be >= 1");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double lam = samples[i].lambda;
    if (!(lam > 0.0) || !std::isfinite(lam) || !std::isfinite(samples[i].bracket)) {
      throw FitError("extrapolate_to_zero: lambda values must be finite and positive");
    }
    if (i > 0 && !(lam < samples[i - 1].lambda)) {
      throw FitError("extrapolate_to_zero: lambda values must be distinct and decreasing");
    }
  }

  const auto full = least_squares_intercept(samples, power_step, 3);
  const auto reduced_set = samples.subspan(1);
  const int reduced_parameters = reduced_set.size() >= 3 ? 3 : 2;
  const auto reduced = least_squares_intercept(reduced_set, power_step, reduced_parameters);

  BracketResult result;
  result.value = full.intercept;
  result.lambda = 0.0;
  result.route = BracketRoute::Extrapolated;
  result.error_estimate =
      full.max_residual + std::abs(full.intercept - reduced.intercept) + full.propagated;
  result.terms = samples.size();
  return result;
}

BracketResult extrapolated_bracket(BoundaryKind kind, CutoffFamily family,
                                   std::span<const double> lambda_grid, double tol,
                                   ModeWeight weight) {
  std::vector<LambdaSample> samples;
  samples.reserve(lambda_grid.size());
  bool flagged = false;
  for (double lam : lambda_grid) {
    const auto b = bracket_finite_lambda(kind, {family, lam}, tol, weight);
    flagged = flagged || b.non_convergent;
    samples.push_back({lam, b.value, b.error_estimate});
  }
  auto result = extrapolate_to_zero(samples, extrapolation_power(family));
  result.non_convergent = flagged;
  return result;
}

Rational euler_maclaurin_finite_part(std::span<const Rational> odd_derivatives) {
  const auto& coefficients = euler_maclaurin_coefficients();
  if (odd_derivatives.size() > coefficients.size()) {
    throw DomainError("euler_maclaurin_finite_part: at most 5 odd derivatives supported");
  }
  Rational sum = 0;
  for (std::size_t k = 0; k < odd_derivatives.size(); ++k) sum += coefficients[k] * odd_derivatives[k];
  return sum;
}

std::vector<Rational> FDerivatives::odd() const {
  return {first, third, higher.at(1), higher.at(3), higher.at(5)};
}

LaurentSeries exponential_mode_function(ModeWeight weight, int max_order) {
  // J(a; lambda) in closed form for f = exp(-lambda t):
  //   tangential  e^{-lambda a} (4a/lambda^2 + 4/lambda^3)
  //   energy      e^{-lambda a} (2a^2/lambda + 4a/lambda^2 + 4/lambda^3)
  //   normal      e^{-lambda a} 2a^2/lambda
  constexpr int kExact = std::numeric_limits<int>::max() / 4;
  const auto exp_series = LaurentSeries::exp_minus_lambda_a(max_order + 3);
  LaurentSeries prefactor(kExact);
  if (weight != ModeWeight::Normal) {
    prefactor += LaurentSeries::term(Polynomial::monomial(4, 1), -2, kExact);
    prefactor += LaurentSeries::term(Polynomial::monomial(4, 0), -3, kExact);
  }
  if (weight != ModeWeight::Tangential) {
    prefactor += LaurentSeries::term(Polynomial::monomial(2, 2), -1, kExact);
  }
  return exp_series * prefactor;
}

FDerivatives f_derivatives(BoundaryKind kind, ModeWeight weight) {
  const Rational offset = offset_of_first_mode(kind);
  LaurentSeries series = exponential_mode_function(weight);
  std::array<Rational, 10> d{};
  for (int order = 1; order <= 9; ++order) {
    series = series.derivative();
    d[static_cast<std::size_t>(order)] = series.at(offset).finite_part();
  }
  FDerivatives result;
  result.first = d[1];
  result.second = d[2];
  result.third = d[3];
  result.higher.assign(d.begin() + 4, d.end());
  return result;
}

CTerms renormalized_c_terms(ModeWeight weight) {
  const LaurentSeries mode = exponential_mode_function(weight);
  CTerms terms;
  terms.c1 = mode.at(Rational(1, 2)).finite_part();
  terms.c2 = mode.definite_integral(Rational(0), Rational(1, 2)).finite_part();
  const auto odd = f_derivatives(BoundaryKind::CP, weight).odd();
  terms.c3 = euler_maclaurin_finite_part(odd);
  return terms;
}

Rational analytic_bracket(BoundaryKind kind, ModeWeight weight) {
  if (kind == BoundaryKind::CC) {
    const auto odd = f_derivatives(BoundaryKind::CC, weight).odd();
    return euler_maclaurin_finite_part(odd);
  }
  return renormalized_c_terms(weight).combination();
}

BracketResult analytic_bracket_result(BoundaryKind kind, ModeWeight weight) {
  BracketResult result;
  result.value = to_double(analytic_bracket(kind, weight));
  result.lambda = 0.0;
  result.error_estimate = 0.0;
  result.route = BracketRoute::AnalyticEM;
  return result;
}

}  // namespace vacuum
