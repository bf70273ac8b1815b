#include "vacuum/cutoff.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "vacuum/errors.hpp"

namespace vacuum {

std::string_view to_string(CutoffFamily family) {
  switch (family) {
    case CutoffFamily::Exponential:
      return "exp";
    case CutoffFamily::Gaussian:
      return "gauss";
    case CutoffFamily::Sharp:
      return "sharp";
  }
  return "unknown";
}

std::optional<CutoffFamily> parse_family(std::string_view text) {
  if (text == "exp" || text == "exponential") return CutoffFamily::Exponential;
  if (text == "gauss" || text == "gaussian") return CutoffFamily::Gaussian;
  if (text == "sharp") return CutoffFamily::Sharp;
  return std::nullopt;
}

void validate(const CutoffSpec& spec) {
  if (!(spec.lambda > 0.0) || !std::isfinite(spec.lambda)) {
    throw DomainError("cutoff: lambda must be finite and positive, got " +
                      std::to_string(spec.lambda));
  }
}

double evaluate(const CutoffSpec& spec, double t) {
  validate(spec);
  if (!(t >= 0.0)) throw DomainError("cutoff: argument must be non-negative");
  switch (spec.family) {
    case CutoffFamily::Exponential:
      return std::exp(-spec.lambda * t);
    case CutoffFamily::Gaussian:
      return std::exp(-spec.lambda * t * t);
    case CutoffFamily::Sharp:
      return t <= 1.0 / spec.lambda ? 1.0 : 0.0;
  }
  return 0.0;
}

double support_end(const CutoffSpec& spec) {
  validate(spec);
  return spec.family == CutoffFamily::Sharp ? 1.0 / spec.lambda
                                            : std::numeric_limits<double>::infinity();
}

double moment_tail(const CutoffSpec& spec, int power, double lower) {
  validate(spec);
  if (power < 0 || power > 3) throw DomainError("moment_tail: power must be in 0..3");
  if (!(lower >= 0.0)) throw DomainError("moment_tail: lower limit must be non-negative");
  const double lam = spec.lambda;
  const double T = lower;

  switch (spec.family) {
    case CutoffFamily::Exponential: {
      // e^{-lam T} sum_j p!/(p-j)! T^{p-j} / lam^{j+1}
      double sum = 0.0;
      double falling = 1.0;
      for (int j = 0; j <= power; ++j) {
        sum += falling * std::pow(T, power - j) / std::pow(lam, j + 1);
        falling *= static_cast<double>(power - j);
      }
      return std::exp(-lam * T) * sum;
    }
    case CutoffFamily::Gaussian: {
      const double g = std::exp(-lam * T * T);
      const double m0 = 0.5 * std::sqrt(std::numbers::pi / lam) * std::erfc(std::sqrt(lam) * T);
      const double m1 = g / (2.0 * lam);
      switch (power) {
        case 0:
          return m0;
        case 1:
          return m1;
        case 2:
          return T * g / (2.0 * lam) + m0 / (2.0 * lam);
        default:
          return T * T * g / (2.0 * lam) + m1 / lam;
      }
    }
    case CutoffFamily::Sharp: {
      const double edge = 1.0 / lam;
      if (T >= edge) return 0.0;
      const int q = power + 1;
      return (std::pow(edge, q) - std::pow(T, q)) / q;
    }
  }
  return 0.0;
}

double rho_integral_closed_form(double a, const CutoffSpec& spec) {
  if (spec.family != CutoffFamily::Exponential) {
    throw UnsupportedFamilyError("rho_integral_closed_form: only the exponential family has a "
                                 "closed form, got " +
                                 std::string(to_string(spec.family)));
  }
  validate(spec);
  if (!(a >= 0.0)) throw DomainError("rho_integral_closed_form: offset must be non-negative");
  const double lam = spec.lambda;
  return 2.0 * std::exp(-lam * a) * (2.0 * a / (lam * lam) + 2.0 / (lam * lam * lam));
}

QuadratureResult rho_integral_numeric(double a, const CutoffSpec& spec, double tol,
                                      ModeWeight weight) {
  validate(spec);
  if (!(a >= 0.0)) throw DomainError("rho_integral_numeric: offset must be non-negative");
  if (!(tol > 0.0)) throw DomainError("rho_integral_numeric: tolerance must be positive");

  const double a2 = a * a;
  auto integrand = [&](double rho) {
    const double s = std::sqrt(rho + a2);
    if (s == 0.0) return 0.0;
    const double f = evaluate(spec, s);
    switch (weight) {
      case ModeWeight::Tangential:
        return rho / s * f;
      case ModeWeight::Normal:
        return a2 / s * f;
      case ModeWeight::Energy:
        return s * f;
    }
    return 0.0;
  };

  const QuadratureOptions options{tol, 0.0, 1'000'000};
  const double split = a2 + 1.0;

  if (spec.family == CutoffFamily::Sharp) {
    const double edge = support_end(spec);
    const double rho_max = edge * edge - a2;
    if (!(rho_max > 0.0)) return {0.0, 0.0, 1};
    if (rho_max <= split) return integrate(integrand, 0.0, rho_max, options);
    auto head = integrate(integrand, 0.0, split, options);
    const auto tail = integrate(integrand, split, rho_max, options);
    head.value += tail.value;
    head.abs_error += tail.abs_error;
    head.evaluations += tail.evaluations;
    return head;
  }

  auto head = integrate(integrand, 0.0, split, options);
  const auto tail = integrate_semi_infinite(integrand, split, options);
  head.value += tail.value;
  head.abs_error += tail.abs_error;
  head.evaluations += tail.evaluations;
  return head;
}

}  // namespace vacuum
