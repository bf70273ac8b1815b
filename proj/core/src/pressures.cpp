#include "vacuum/pressures.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "vacuum/errors.hpp"

namespace vacuum {

std::string_view to_string(Quantity quantity) {
  switch (quantity) {
    case Quantity::TangentialPressure:
      return "tangential_pressure";
    case Quantity::NormalPressure:
      return "normal_pressure";
    case Quantity::EnergyDensityDiff:
      return "energy_density_difference";
  }
  return "unknown";
}

std::string_view to_string(Route route) { return route == Route::Analytic ? "analytic" : "numeric"; }

std::vector<std::string> Geometry::validate() const {
  auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
  if (!positive(d)) throw DomainError("geometry: separation d must be positive");
  if (!positive(L)) throw DomainError("geometry: width L must be positive");
  if (!positive(M) || !(M > d)) throw DomainError("geometry: overlap M must exceed d");
  std::vector<std::string> warnings;
  if (M < 10.0 * d) {
    warnings.emplace_back("geometry: overlap M is less than 10 d; edge effects are not modeled");
  }
  return warnings;
}

double reduced_unit(double d, const PhysicalConstants& constants) {
  if (!(d > 0.0) || !std::isfinite(d)) throw DomainError("reduced_unit: d must be positive");
  const double d2 = d * d;
  return std::numbers::pi * std::numbers::pi * constants.hbar * constants.c / (d2 * d2);
}

double to_si(double reduced, double d, const PhysicalConstants& constants) {
  return reduced * reduced_unit(d, constants);
}

double from_si(double pascals, double d, const PhysicalConstants& constants) {
  return pascals / reduced_unit(d, constants);
}

namespace {

ModeWeight weight_of(Quantity quantity) {
  switch (quantity) {
    case Quantity::TangentialPressure:
      return ModeWeight::Tangential;
    case Quantity::NormalPressure:
      return ModeWeight::Normal;
    case Quantity::EnergyDensityDiff:
      return ModeWeight::Energy;
  }
  return ModeWeight::Tangential;
}

ReducedQuantity reduce(BoundaryKind kind, Quantity quantity, const RouteConfig& config) {
  const auto bracket = quantity_bracket(kind, quantity, config);
  const double factor = reduced_prefactor(quantity);
  return {bracket.value * factor, quantity, bracket.error_estimate * factor};
}

}  // namespace

double reduced_prefactor(Quantity quantity) {
  return quantity == Quantity::TangentialPressure ? 0.125 : 0.25;
}

BracketResult quantity_bracket(BoundaryKind kind, Quantity quantity, const RouteConfig& config) {
  const ModeWeight weight = weight_of(quantity);
  if (config.route == Route::Analytic) return analytic_bracket_result(kind, weight);
  auto result = extrapolated_bracket(kind, config.family, config.lambda_grid, config.tol, weight);
  if (result.non_convergent) {
    throw ConvergenceError("bracket for " + std::string(to_string(quantity)) + " with the " +
                               std::string(to_string(config.family)) +
                               " cutoff does not converge as lambda -> 0",
                           result.value, result.error_estimate);
  }
  return result;
}

ReducedQuantity tangential_reduced_pressure(BoundaryKind kind, const RouteConfig& config) {
  return reduce(kind, Quantity::TangentialPressure, config);
}

ReducedQuantity energy_density_difference(BoundaryKind kind, const RouteConfig& config) {
  return reduce(kind, Quantity::EnergyDensityDiff, config);
}

ReducedQuantity normal_reduced_pressure(BoundaryKind kind, const RouteConfig& config) {
  return reduce(kind, Quantity::NormalPressure, config);
}

double pressure_identity_residual(double tangential, double energy, double normal) {
  return std::abs(tangential - 0.5 * (energy - normal));
}

double pressure_identity_check(BoundaryKind kind, const RouteConfig& config) {
  return pressure_identity_residual(tangential_reduced_pressure(kind, config).value,
                                    energy_density_difference(kind, config).value,
                                    normal_reduced_pressure(kind, config).value);
}

TangentialForce tangential_force(const Geometry& geom, BoundaryKind kind,
                                 const PhysicalConstants& constants, const RouteConfig& config) {
  geom.validate();
  TangentialForce force;
  force.pressure = tangential_reduced_pressure(kind, config);
  force.newtons = to_si(force.pressure.value, geom.d, constants) * geom.L * geom.d;
  // Negative pressure on the side boundary points along -y and pulls the
  // upper plate further over the lower one.
  force.increases_overlap = force.newtons < 0.0;
  return force;
}

EnergyBalance energy_balance_check(const Geometry& geom, BoundaryKind kind,
                                   const PhysicalConstants& constants, const RouteConfig& config) {
  geom.validate();
  const double rho = energy_density_difference(kind, config).value;

  EnergyBalance balance;
  // rho > 0: free space holds the excess and shrinks as M grows.
  // rho < 0: the overlap holds it and grows with M.
  balance.overlap_region_in_excess = rho < 0.0;
  balance.p_neg_reduced = -std::abs(rho);

  const double excess_density = std::abs(rho) * reduced_unit(geom.d, constants);
  const double section = geom.L * geom.d;
  const double reference_length = 2.0 * geom.M;
  auto volume = [&](double m) {
    return balance.overlap_region_in_excess ? section * m : section * (reference_length - m);
  };
  auto energy = [&](double m) { return excess_density * volume(m); };

  const double h = 1e-3 * geom.M;
  const double dE = energy(geom.M + h) - energy(geom.M - h);
  const double dV = volume(geom.M + h) - volume(geom.M - h);
  balance.finite_difference_reduced = from_si(-dE / dV, geom.d, constants);
  balance.finite_difference_residual =
      std::abs(balance.finite_difference_reduced - balance.p_neg_reduced) /
      std::abs(balance.p_neg_reduced);

  balance.radiation_reduced = tangential_reduced_pressure(kind, config).value;
  balance.radiation_residual =
      std::abs(std::abs(balance.p_neg_reduced) - std::abs(balance.radiation_reduced));
  return balance;
}

}  // namespace vacuum
