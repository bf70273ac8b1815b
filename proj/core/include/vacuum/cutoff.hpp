#pragma once

#include <optional>
#include <string_view>

#include "vacuum/quadrature.hpp"
#include "vacuum/spectra.hpp"

namespace vacuum {

enum class CutoffFamily { Exponential, Gaussian, Sharp };

std::string_view to_string(CutoffFamily family);
std::optional<CutoffFamily> parse_family(std::string_view text);

/// Regulator f(t) with f(0) = 1, non-increasing, decaying for lambda > 0:
///   Exponential  exp(-lambda t)
///   Gaussian     exp(-lambda t^2)
///   Sharp        1 for t <= 1/lambda, else 0
struct CutoffSpec {
  CutoffFamily family = CutoffFamily::Exponential;
  double lambda = 1.0;
};

/// Throws DomainError unless lambda is finite and positive.
void validate(const CutoffSpec& spec);

double evaluate(const CutoffSpec& spec, double t);

/// Smallest T with f = 0 on (T, inf); +inf for the smooth families.
double support_end(const CutoffSpec& spec);

/// int_T^inf t^p f(t) dt for p in 0..3, T >= 0, in closed form.
double moment_tail(const CutoffSpec& spec, int power, double lower);

/// Exponential only:
///   I(a, lambda) = int_0^inf rho f(sqrt(rho+a^2)) / sqrt(rho+a^2) drho
///                = 2 exp(-lambda a) (2a/lambda^2 + 2/lambda^3).
/// Throws UnsupportedFamilyError for other families.
double rho_integral_closed_form(double a, const CutoffSpec& spec);

/// Per-mode integral over the in-plane variable rho for weight w, with
/// s = sqrt(rho + a^2):
///   Tangential  int rho/s f(s) drho      (= I(a, lambda))
///   Normal      int a^2/s f(s) drho
///   Energy      int s f(s) drho
/// The range is split at a^2 + 1 (and at the Sharp support edge) and the
/// tail is mapped to a finite interval.
QuadratureResult rho_integral_numeric(double a, const CutoffSpec& spec, double tol,
                                      ModeWeight weight = ModeWeight::Tangential);

}  // namespace vacuum
