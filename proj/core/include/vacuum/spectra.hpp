#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

namespace vacuum {

/// Plate pair. CC: two perfect conductors, k_z = n*pi/d. CP: conductor facing
/// an infinitely permeable plate, k_z = (2n+1)*pi/(2d).
enum class BoundaryKind { CC, CP };

/// Per-mode factor entering a regularized sum.
///   Tangential: k_y^2/k^2 (radiation pressure on the side cross-section)
///   Normal:     k_z^2/k^2 (radiation pressure on the plates)
///   Energy:     1         (zero-point energy density)
enum class ModeWeight { Tangential, Normal, Energy };

std::string_view to_string(BoundaryKind kind);
std::string_view to_string(ModeWeight weight);
std::optional<BoundaryKind> parse_boundary(std::string_view text);

struct ModeVector {
  double kx = 0.0;
  double ky = 0.0;
  double kz = 0.0;

  double norm() const;
  /// omega = c * |k|.
  double angular_frequency(double speed_of_light) const;
};

/// k_z of the n-th standing mode between plates separated by d.
double discrete_wavenumber(BoundaryKind kind, std::size_t n, double d);

/// k_z * d / pi: n for CC, n + 1/2 for CP.
double mode_offset(BoundaryKind kind, std::size_t n);

/// Weight of mode n in the discrete sum: CC halves the n = 0 term.
double mode_weight(BoundaryKind kind, std::size_t n);

/// cos^2(theta) = k_y^2 / k^2 for reflection off the plane normal to y.
double incident_pressure_weight(const ModeVector& k);

/// k_z^2 / k^2.
double normal_pressure_weight(const ModeVector& k);

/// Position of t relative to the discrete offsets: t = offset(cell) + fraction
/// with fraction in [0, 1). cell is -1 for CP below the first offset 1/2.
struct LatticeCell {
  long cell = 0;
  double fraction = 0.0;
};

LatticeCell locate_cell(BoundaryKind kind, double t);

/// Continuum-minus-discrete remainder of the per-mode polynomial g(t, a),
///   K(t) = int_0^t g(t, a) da - sum_{offset_n < t} w_n g(t, offset_n),
/// with g = t^2 - a^2 (Tangential), a^2 (Normal), t^2 (Energy). A regularized
/// bracket with cutoff f equals 2 * int_0^inf f(t) K(t) dt. Evaluated in
/// cell-local form so large t loses no digits.
double remainder_kernel(BoundaryKind kind, ModeWeight weight, double t);

/// |K(t)| <= c0 + c1 t + c2 t^2 for all t >= 0.
struct KernelBound {
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
};

KernelBound remainder_kernel_bound(ModeWeight weight);

}  // namespace vacuum
