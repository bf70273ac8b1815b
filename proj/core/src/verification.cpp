#include "vacuum/verification.hpp"

#include <cmath>
#include <exception>
#include <functional>
#include <numbers>
#include <sstream>

#include "vacuum/pressures.hpp"
#include "vacuum/quadrature.hpp"
#include "vacuum/regularization.hpp"

namespace vacuum {
namespace {

std::string describe(double got, double want) {
  std::ostringstream out;
  out.precision(10);
  out << "got " << got << ", want " << want;
  return out.str();
}

// Exponential-regulated brackets summed in closed form with geometric series.
double exponential_bracket_closed_form(BoundaryKind kind, double lam) {
  const double h = 0.5 * lam;
  const double l2 = lam * lam;
  const double l3 = l2 * lam;
  const double continuum = 8.0 / (l2 * l2);
  if (kind == BoundaryKind::CC) {
    return continuum - 1.0 / (l2 * std::sinh(h) * std::sinh(h)) - 2.0 / (l3 * std::tanh(h));
  }
  return continuum - std::cosh(h) / (l2 * std::sinh(h) * std::sinh(h)) - 2.0 / (l3 * std::sinh(h));
}

}  // namespace

std::vector<CheckResult> run_verification(double tol) {
  std::vector<CheckResult> results;
  auto check = [&](std::string name, const std::function<std::pair<bool, std::string>()>& body) {
    CheckResult r{std::move(name), false, {}};
    try {
      std::tie(r.passed, r.detail) = body();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  };

  RouteConfig numeric;
  numeric.route = Route::Numeric;
  numeric.tol = tol;

  check("analytic CC tangential pressure is -1/720", [] {
    const Rational p = analytic_bracket(BoundaryKind::CC) / 8;
    return std::pair{p == Rational(-1, 720), to_string(p)};
  });
  check("analytic CP tangential pressure is 7/5760", [] {
    const Rational p = analytic_bracket(BoundaryKind::CP) / 8;
    return std::pair{p == Rational(7, 5760), to_string(p)};
  });
  check("renormalized C terms 1/6, 1/48, 13/180 combine to 7/720", [] {
    const auto c = renormalized_c_terms();
    const bool ok = c.c1 == Rational(1, 6) && c.c2 == Rational(1, 48) &&
                    c.c3 == Rational(13, 180) && c.combination() == Rational(7, 720);
    return std::pair{ok, to_string(c.c1) + ", " + to_string(c.c2) + ", " + to_string(c.c3)};
  });
  check("renormalized F'(0)=1, F'''(0)=8, higher derivatives vanish", [] {
    const auto f = f_derivatives();
    bool ok = f.first == 1 && f.third == 8;
    for (const auto& h : f.higher) ok = ok && h == 0;
    return std::pair{ok, to_string(f.first) + ", " + to_string(f.third)};
  });
  for (auto kind : {BoundaryKind::CC, BoundaryKind::CP}) {
    const double want = kind == BoundaryKind::CC ? -1.0 / 720.0 : 7.0 / 5760.0;
    check("numeric " + std::string(to_string(kind)) + " tangential pressure within 1e-5", [&] {
      const double got = tangential_reduced_pressure(kind, numeric).value;
      return std::pair{std::abs(got - want) < 1e-5, describe(got, want)};
    });
  }
  check("finite-lambda bracket matches geometric-series closed form at lambda=1", [&] {
    const double closed = exponential_bracket_closed_form(BoundaryKind::CC, 1.0);
    const double kernel = bracket_finite_lambda(BoundaryKind::CC, {CutoffFamily::Exponential, 1.0}, tol).value;
    const double modes = bracket_mode_sum(BoundaryKind::CC, {CutoffFamily::Exponential, 1.0}, tol).value;
    const bool ok = std::abs(kernel - closed) < 1e-6 && std::abs(modes - closed) < 1e-8;
    return std::pair{ok, describe(kernel, closed)};
  });
  for (auto kind : {BoundaryKind::CC, BoundaryKind::CP}) {
    check("gaussian and exponential agree for " + std::string(to_string(kind)), [&] {
      const auto grid = numeric.lambda_grid;
      const double e = extrapolated_bracket(kind, CutoffFamily::Exponential, grid, tol).value;
      const double g = extrapolated_bracket(kind, CutoffFamily::Gaussian, grid, tol).value;
      return std::pair{std::abs(g - e) <= 1e-3 * std::abs(e), describe(g, e)};
    });
  }
  check("sharp cutoff is flagged non-convergent", [&] {
    const auto b = extrapolated_bracket(BoundaryKind::CC, CutoffFamily::Sharp,
                                        numeric.lambda_grid, tol);
    return std::pair{b.non_convergent, describe(b.value, -1.0 / 90.0)};
  });
  for (auto kind : {BoundaryKind::CC, BoundaryKind::CP}) {
    check("pressure identity P_T = (rho - P_N)/2 for " + std::string(to_string(kind)), [&] {
      const double r = pressure_identity_check(kind, numeric);
      return std::pair{r < 1e-6, "residual " + std::to_string(r)};
    });
  }
  check("CC tangential force for d=1um, L=1cm", [] {
    const PhysicalConstants k;
    const Geometry g{1e-6, 1e-2, 1e-4};
    const double direct = std::numbers::pi * std::numbers::pi * k.hbar * k.c * g.L /
                          (720.0 * g.d * g.d * g.d);
    const auto f = tangential_force(g, BoundaryKind::CC, k);
    const Geometry doubled{2e-6, 1e-2, 1e-4};
    const auto f2 = tangential_force(doubled, BoundaryKind::CC, k);
    const bool ok = std::abs(std::abs(f.newtons) - direct) <= 1e-3 * direct &&
                    f.increases_overlap &&
                    std::abs(f.newtons / f2.newtons - 8.0) < 1e-12;
    return std::pair{ok, describe(f.newtons, -direct)};
  });
  for (auto kind : {BoundaryKind::CC, BoundaryKind::CP}) {
    check("energy balance -dE/dV = -rho for " + std::string(to_string(kind)), [&] {
      const auto b = energy_balance_check({1e-6, 1e-2, 1e-4}, kind, {}, numeric);
      const bool ok = b.finite_difference_residual < 1e-8 && b.radiation_residual < 1e-5;
      return std::pair{ok, describe(b.finite_difference_reduced, b.p_neg_reduced)};
    });
  }
  check("quadrature and series kernels", [] {
    const auto gamma3 = integrate_semi_infinite([](double t) { return t * t * std::exp(-t); }, 0.0,
                                                {1e-13, 0.0, 1'000'000});
    const double q = std::exp(-1.0);
    const auto geometric = sum_series([q](std::size_t n) { return std::pow(q, static_cast<double>(n)); },
                                      true,
                                      [q](std::size_t n) {
                                        return std::pow(q, static_cast<double>(n + 1)) / (1.0 - q);
                                      },
                                      {1e-14, 0.0, 100'000});
    const double want = 0.5 + 1.0 / (std::exp(1.0) - 1.0);
    const bool ok = std::abs(gamma3.value - 2.0) < 2e-10 && std::abs(geometric.value - want) < 1e-10 * want;
    return std::pair{ok, describe(gamma3.value, 2.0)};
  });
  return results;
}

}  // namespace vacuum
