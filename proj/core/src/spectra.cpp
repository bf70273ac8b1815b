#include "vacuum/spectra.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "vacuum/errors.hpp"

namespace vacuum {

std::string_view to_string(BoundaryKind kind) {
  return kind == BoundaryKind::CC ? "cc" : "cp";
}

std::string_view to_string(ModeWeight weight) {
  switch (weight) {
    case ModeWeight::Tangential:
      return "tangential";
    case ModeWeight::Normal:
      return "normal";
    case ModeWeight::Energy:
      return "energy";
  }
  return "unknown";
}

std::optional<BoundaryKind> parse_boundary(std::string_view text) {
  if (text == "cc" || text == "CC") return BoundaryKind::CC;
  if (text == "cp" || text == "CP") return BoundaryKind::CP;
  return std::nullopt;
}

double ModeVector::norm() const { return std::sqrt(kx * kx + ky * ky + kz * kz); }

double ModeVector::angular_frequency(double speed_of_light) const {
  return speed_of_light * norm();
}

double mode_offset(BoundaryKind kind, std::size_t n) {
  const auto index = static_cast<double>(n);
  return kind == BoundaryKind::CC ? index : index + 0.5;
}

double discrete_wavenumber(BoundaryKind kind, std::size_t n, double d) {
  if (!(d > 0.0) || !std::isfinite(d)) {
    throw DomainError("discrete_wavenumber: plate separation must be positive, got " +
                      std::to_string(d));
  }
  return mode_offset(kind, n) * std::numbers::pi / d;
}

double mode_weight(BoundaryKind kind, std::size_t n) {
  return (kind == BoundaryKind::CC && n == 0) ? 0.5 : 1.0;
}

namespace {

double squared_norm_checked(const ModeVector& k, const char* who) {
  const double k2 = k.kx * k.kx + k.ky * k.ky + k.kz * k.kz;
  if (!(k2 > 0.0) || !std::isfinite(k2)) {
    throw DomainError(std::string(who) + ": wave vector must be finite and non-zero");
  }
  return k2;
}

double bernoulli2(double x) { return x * x - x + 1.0 / 6.0; }

}  // namespace

double incident_pressure_weight(const ModeVector& k) {
  return k.ky * k.ky / squared_norm_checked(k, "incident_pressure_weight");
}

double normal_pressure_weight(const ModeVector& k) {
  return k.kz * k.kz / squared_norm_checked(k, "normal_pressure_weight");
}

LatticeCell locate_cell(BoundaryKind kind, double t) {
  if (!(t >= 0.0)) throw DomainError("locate_cell: t must be non-negative");
  const double shifted = kind == BoundaryKind::CC ? t : t - 0.5;
  const double cell = std::floor(shifted);
  return {static_cast<long>(cell), shifted - cell};
}

double remainder_kernel(BoundaryKind kind, ModeWeight weight, double t) {
  const auto [cell, x] = locate_cell(kind, t);
  const double k = static_cast<double>(cell);

  // Tangential: k B2(x) plus a cubic in x that depends on where the lattice
  // starts. For CP the formula also holds on the first half cell (k = -1).
  const double tangential =
      kind == BoundaryKind::CC
          ? k * bernoulli2(x) + (2.0 / 3.0) * x * x * x - 0.5 * x * x
          : k * bernoulli2(x) + (2.0 / 3.0) * x * x * x - 0.5 * x + 1.0 / 12.0;
  // Energy: t^2 (t - weighted count of offsets below t) = t^2 (x - 1/2).
  const double energy = t * t * (x - 0.5);

  switch (weight) {
    case ModeWeight::Tangential:
      return tangential;
    case ModeWeight::Energy:
      return energy;
    case ModeWeight::Normal:
      return energy - tangential;
  }
  return 0.0;
}

KernelBound remainder_kernel_bound(ModeWeight weight) {
  switch (weight) {
    case ModeWeight::Tangential:
      return {0.25, 1.0 / 6.0, 0.0};
    case ModeWeight::Energy:
      return {0.0, 0.0, 0.5};
    case ModeWeight::Normal:
      return {0.25, 1.0 / 6.0, 0.5};
  }
  return {};
}

}  // namespace vacuum
