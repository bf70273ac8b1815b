#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vacuum/cutoff.hpp"
#include "vacuum/regularization.hpp"
#include "vacuum/spectra.hpp"

namespace vacuum {

enum class Quantity { TangentialPressure, NormalPressure, EnergyDensityDiff };

std::string_view to_string(Quantity quantity);

/// Pressure or energy density in units of pi^2 hbar c / d^4. All values are
/// continuum minus discrete (outside minus between the plates).
struct ReducedQuantity {
  double value = 0.0;
  Quantity meaning = Quantity::TangentialPressure;
  double error_estimate = 0.0;
};

struct PhysicalConstants {
  double hbar = 1.054571817e-34;  // J s
  double c = 2.99792458e8;        // m / s
};

/// Plate separation d, width L and overlap M, all in meters.
struct Geometry {
  double d = 1e-6;
  double L = 1e-2;
  double M = 1e-4;

  /// Throws DomainError unless d > 0, L > 0 and M > d. Returns warnings
  /// (currently: overlap shorter than ten separations).
  std::vector<std::string> validate() const;
};

enum class Route { Analytic, Numeric };

std::string_view to_string(Route route);

struct RouteConfig {
  Route route = Route::Analytic;
  CutoffFamily family = CutoffFamily::Exponential;
  std::vector<double> lambda_grid = {0.5, 0.25, 0.125, 0.0625};
  double tol = 1e-8;
};

/// pi^2 hbar c / d^4 in pascals.
double reduced_unit(double d, const PhysicalConstants& constants = {});
double to_si(double reduced, double d, const PhysicalConstants& constants = {});
double from_si(double pascals, double d, const PhysicalConstants& constants = {});

/// The regularized bracket behind a quantity and its reduced prefactor
/// (1/8 tangential; 1/4 normal and energy). Throws ConvergenceError when a
/// numeric route comes back flagged non-convergent.
BracketResult quantity_bracket(BoundaryKind kind, Quantity quantity, const RouteConfig& config);
double reduced_prefactor(Quantity quantity);

/// Side-boundary radiation pressure. CC: -1/720; CP: +7/5760.
ReducedQuantity tangential_reduced_pressure(BoundaryKind kind, const RouteConfig& config = {});

/// Zero-point energy density outside minus between the plates.
/// CC: +1/720; CP: -7/5760.
ReducedQuantity energy_density_difference(BoundaryKind kind, const RouteConfig& config = {});

/// Plate-normal radiation pressure. CC: +1/240 (attractive); CP: -7/1920.
ReducedQuantity normal_reduced_pressure(BoundaryKind kind, const RouteConfig& config = {});

/// |P_T - (rho - P_N)/2| for the three quantities given.
double pressure_identity_residual(double tangential, double energy, double normal);

/// Residual of P_T = (rho - P_N)/2 with all three from the same route.
double pressure_identity_check(BoundaryKind kind, const RouteConfig& config = {});

/// Force on the upper plate along +y: pressure times the edge cross-section L*d.
struct TangentialForce {
  double newtons = 0.0;
  /// True when the force pulls the plates further into overlap.
  bool increases_overlap = false;
  ReducedQuantity pressure;
};

TangentialForce tangential_force(const Geometry& geom, BoundaryKind kind,
                                 const PhysicalConstants& constants = {},
                                 const RouteConfig& config = {});

/// Energy-balance check: the region with the positive energy excess (free
/// space for CC, the overlap for CP) changes volume with M, and
/// P_neg = -dE/dV = -|rho|.
struct EnergyBalance {
  double p_neg_reduced = 0.0;
  /// -dE/dV from a central difference of E(M) in M, reduced units.
  double finite_difference_reduced = 0.0;
  double radiation_reduced = 0.0;
  /// |fd - P_neg| / |P_neg|.
  double finite_difference_residual = 0.0;
  /// ||P_neg| - |P_T||.
  double radiation_residual = 0.0;
  bool overlap_region_in_excess = false;
};

EnergyBalance energy_balance_check(const Geometry& geom, BoundaryKind kind,
                                   const PhysicalConstants& constants = {},
                                   const RouteConfig& config = {});

}  // namespace vacuum
