#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vacuum/cutoff.hpp"
#include "vacuum/pressures.hpp"
#include "vacuum/spectra.hpp"

namespace vacuum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline constexpr double kDefaultTolerance = 1e-8;

enum class Command { Pressure, Force, Sweep, Verify, Convert };
enum class OutputFormat { Csv, Json };

struct RunConfig {
  Command command = Command::Pressure;
  BoundaryKind boundary = BoundaryKind::CC;
  Route route = Route::Analytic;
  CutoffFamily family = CutoffFamily::Exponential;
  Quantity quantity = Quantity::TangentialPressure;
  std::vector<double> lambda_grid = {0.5, 0.25, 0.125, 0.0625};
  double d = 1e-6;
  double L = 1e-2;
  double M = 1e-4;
  OutputFormat output = OutputFormat::Csv;
  double tol = kDefaultTolerance;
  // convert: exactly one of these.
  std::optional<double> reduced_value;
  std::optional<double> si_value;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws UsageError on an inconsistent configuration. Returns warnings.
std::vector<std::string> validate(const RunConfig& config);

/// Executes a validated configuration. Data goes to out, diagnostics to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (honouring VACUUM_TOL) and runs. Returns the process exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Nine significant digits, scientific, locale independent.
std::string format_number(double value);

/// RFC-4180 quoting when the field holds a comma, quote or newline.
std::string csv_field(const std::string& text);

}  // namespace vacuum::cli
