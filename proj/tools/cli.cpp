#include "cli.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "vacuum/errors.hpp"
#include "vacuum/regularization.hpp"
#include "vacuum/verification.hpp"

namespace vacuum::cli {

using nlohmann::json;

std::string format_number(double value) {
  char buffer[64];
  const auto [end, ec] =
      std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::scientific, 8);
  if (ec != std::errc{}) return "nan";
  return std::string(buffer, end);
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

namespace {

std::string_view units_of(Quantity quantity) {
  return quantity == Quantity::EnergyDensityDiff ? "J/m^3" : "Pa";
}

RouteConfig route_config(const RunConfig& config) {
  RouteConfig r;
  r.route = config.route;
  r.family = config.family;
  r.lambda_grid = config.lambda_grid;
  r.tol = config.tol;
  return r;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out << ',';
    out << csv_field(fields[i]);
  }
  out << "\r\n";
}

void write_json(std::ostream& out, const json& document) { out << document.dump(2) << '\n'; }

int run_pressure(const RunConfig& config, std::ostream& out) {
  const auto route = route_config(config);
  ReducedQuantity q;
  switch (config.quantity) {
    case Quantity::TangentialPressure:
      q = tangential_reduced_pressure(config.boundary, route);
      break;
    case Quantity::NormalPressure:
      q = normal_reduced_pressure(config.boundary, route);
      break;
    case Quantity::EnergyDensityDiff:
      q = energy_density_difference(config.boundary, route);
      break;
  }
  const double si = to_si(q.value, config.d);
  if (config.output == OutputFormat::Json) {
    write_json(out, {{"quantity", vacuum::to_string(q.meaning)},
                     {"reduced_value", q.value},
                     {"si_value", si},
                     {"units", units_of(q.meaning)},
                     {"boundary", vacuum::to_string(config.boundary)},
                     {"route", vacuum::to_string(config.route)},
                     {"error_estimate", q.error_estimate},
                     {"d", config.d}});
    return kExitOk;
  }
  write_csv_row(out, {"quantity", "boundary", "route", "reduced_value", "si_value", "units",
                      "error_estimate"});
  write_csv_row(out, {std::string(vacuum::to_string(q.meaning)),
                      std::string(vacuum::to_string(config.boundary)),
                      std::string(vacuum::to_string(config.route)), format_number(q.value),
                      format_number(si), std::string(units_of(q.meaning)),
                      format_number(q.error_estimate)});
  return kExitOk;
}

int run_force(const RunConfig& config, std::ostream& out) {
  const Geometry geom{config.d, config.L, config.M};
  const auto force = tangential_force(geom, config.boundary, {}, route_config(config));
  const std::string direction = force.increases_overlap ? "increases_overlap" : "decreases_overlap";
  const double relative_error = force.pressure.value == 0.0
                                    ? 0.0
                                    : force.pressure.error_estimate / std::abs(force.pressure.value);
  const double error_estimate = std::abs(force.newtons) * relative_error;
  if (config.output == OutputFormat::Json) {
    write_json(out, {{"quantity", "tangential_force"},
                     {"reduced_value", force.pressure.value},
                     {"si_value", force.newtons},
                     {"units", "N"},
                     {"boundary", vacuum::to_string(config.boundary)},
                     {"route", vacuum::to_string(config.route)},
                     {"error_estimate", error_estimate},
                     {"direction", direction},
                     {"geometry", {{"d", config.d}, {"L", config.L}, {"M", config.M}}}});
    return kExitOk;
  }
  write_csv_row(out, {"quantity", "boundary", "route", "reduced_value", "si_value", "units",
                      "error_estimate", "direction"});
  write_csv_row(out, {"tangential_force", std::string(vacuum::to_string(config.boundary)),
                      std::string(vacuum::to_string(config.route)),
                      format_number(force.pressure.value), format_number(force.newtons), "N",
                      format_number(error_estimate), direction});
  return kExitOk;
}

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

int run_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const ModeWeight weight = weight_of(config.quantity);
  const double factor = reduced_prefactor(config.quantity);
  std::vector<BracketResult> rows;
  std::vector<LambdaSample> samples;
  for (double lam : config.lambda_grid) {
    rows.push_back(bracket_finite_lambda(config.boundary, {config.family, lam}, config.tol, weight));
    samples.push_back({lam, rows.back().value, rows.back().error_estimate});
    if (rows.back().non_convergent) {
      err << "warning: bracket at lambda=" << format_number(lam)
          << " oscillates; this cutoff does not converge\n";
    }
  }
  std::optional<BracketResult> limit;
  if (samples.size() >= 3) limit = extrapolate_to_zero(samples, extrapolation_power(config.family));

  if (config.output == OutputFormat::Json) {
    json document{{"quantity", vacuum::to_string(config.quantity)},
                  {"boundary", vacuum::to_string(config.boundary)},
                  {"family", vacuum::to_string(config.family)},
                  {"route", "numeric"},
                  {"rows", json::array()}};
    for (const auto& r : rows) {
      document["rows"].push_back({{"lambda", r.lambda},
                                  {"bracket", r.value},
                                  {"reduced_pressure", r.value * factor},
                                  {"abs_error", r.error_estimate},
                                  {"non_convergent", r.non_convergent}});
    }
    if (limit) {
      bool flagged = false;
      for (const auto& r : rows) flagged = flagged || r.non_convergent;
      document["extrapolated"] = {{"bracket", limit->value},
                                  {"reduced_value", limit->value * factor},
                                  {"si_value", to_si(limit->value * factor, config.d)},
                                  {"units", units_of(config.quantity)},
                                  {"error_estimate", limit->error_estimate * factor},
                                  {"non_convergent", flagged}};
    }
    write_json(out, document);
    return kExitOk;
  }
  write_csv_row(out, {"lambda", "bracket", "reduced_pressure", "abs_error"});
  for (const auto& r : rows) {
    write_csv_row(out, {format_number(r.lambda), format_number(r.value),
                        format_number(r.value * factor), format_number(r.error_estimate)});
  }
  return kExitOk;
}

int run_verify(const RunConfig& config, std::ostream& out) {
  const auto checks = run_verification(config.tol);
  std::size_t passed = 0;
  for (const auto& c : checks) passed += c.passed ? 1 : 0;
  if (config.output == OutputFormat::Json) {
    json document{{"passed", passed}, {"total", checks.size()}, {"checks", json::array()}};
    for (const auto& c : checks) {
      document["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    write_json(out, document);
  } else {
    write_csv_row(out, {"check", "status", "detail"});
    for (const auto& c : checks) write_csv_row(out, {c.name, c.passed ? "PASS" : "FAIL", c.detail});
  }
  return passed == checks.size() ? kExitOk : kExitFailure;
}

int run_convert(const RunConfig& config, std::ostream& out) {
  const double reduced = config.reduced_value ? *config.reduced_value : from_si(*config.si_value, config.d);
  const double si = config.reduced_value ? to_si(*config.reduced_value, config.d) : *config.si_value;
  if (config.output == OutputFormat::Json) {
    write_json(out, {{"quantity", "conversion"},
                     {"reduced_value", reduced},
                     {"si_value", si},
                     {"units", "Pa"},
                     {"boundary", vacuum::to_string(config.boundary)},
                     {"route", "conversion"},
                     {"error_estimate", 0.0},
                     {"d", config.d}});
    return kExitOk;
  }
  write_csv_row(out, {"quantity", "reduced_value", "si_value", "units", "d"});
  write_csv_row(out, {"conversion", format_number(reduced), format_number(si), "Pa",
                      format_number(config.d)});
  return kExitOk;
}

}  // namespace

std::vector<std::string> validate(const RunConfig& config) {
  std::vector<std::string> warnings;
  if (!(config.tol > 0.0) || !std::isfinite(config.tol)) {
    throw UsageError("--tol must be a positive number");
  }
  const bool needs_grid = config.command == Command::Sweep ||
                          (config.route == Route::Numeric &&
                           (config.command == Command::Pressure || config.command == Command::Force));
  if (needs_grid) {
    if (config.lambda_grid.empty()) throw UsageError("--lambda-grid must not be empty");
    for (std::size_t i = 0; i < config.lambda_grid.size(); ++i) {
      const double lam = config.lambda_grid[i];
      if (!(lam > 0.0) || !std::isfinite(lam)) throw UsageError("--lambda-grid values must be positive");
      if (i > 0 && !(lam < config.lambda_grid[i - 1])) {
        throw UsageError("--lambda-grid must be strictly decreasing");
      }
      if (lam >= 2.0) {
        warnings.push_back("lambda=" + format_number(lam) +
                           " >= 2: extrapolation quality degrades for coarse regulators");
      }
    }
    if (config.route == Route::Numeric && config.command != Command::Sweep &&
        config.lambda_grid.size() < 3) {
      throw UsageError("--lambda-grid needs at least 3 values for the numeric route");
    }
  }
  if (!(config.d > 0.0) || !std::isfinite(config.d)) throw UsageError("--d must be positive");
  if (config.command == Command::Force) {
    try {
      const auto geometry_warnings = Geometry{config.d, config.L, config.M}.validate();
      warnings.insert(warnings.end(), geometry_warnings.begin(), geometry_warnings.end());
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  if (config.command == Command::Convert) {
    if (config.reduced_value.has_value() == config.si_value.has_value()) {
      throw UsageError("convert needs exactly one of --reduced or --si");
    }
  }
  return warnings;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    for (const auto& w : validate(config)) err << "warning: " << w << '\n';
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    switch (config.command) {
      case Command::Pressure:
        return run_pressure(config, out);
      case Command::Force:
        return run_force(config, out);
      case Command::Sweep:
        return run_sweep(config, out, err);
      case Command::Verify:
        return run_verify(config, out);
      case Command::Convert:
        return run_convert(config, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  if (const char* env = std::getenv("VACUUM_TOL")) {
    char* end = nullptr;
    const double value = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(value > 0.0)) {
      err << "usage error: VACUUM_TOL must be a positive number, got '" << env << "'\n";
      return kExitUsage;
    }
    config.tol = value;
  }

  CLI::App app{"Regularized zero-point radiation pressures between misaligned plates"};
  app.require_subcommand(1);

  const std::map<std::string, BoundaryKind> boundaries{{"cc", BoundaryKind::CC},
                                                       {"cp", BoundaryKind::CP}};
  const std::map<std::string, Route> routes{{"analytic", Route::Analytic}, {"numeric", Route::Numeric}};
  const std::map<std::string, CutoffFamily> families{{"exp", CutoffFamily::Exponential},
                                                     {"gauss", CutoffFamily::Gaussian},
                                                     {"sharp", CutoffFamily::Sharp}};
  const std::map<std::string, Quantity> quantities{{"tangential", Quantity::TangentialPressure},
                                                   {"normal", Quantity::NormalPressure},
                                                   {"energy", Quantity::EnergyDensityDiff}};
  const std::map<std::string, OutputFormat> formats{{"csv", OutputFormat::Csv},
                                                    {"json", OutputFormat::Json}};

  struct {
    std::string boundary = "cc";
    std::string route = "analytic";
    std::string family = "exp";
    std::string quantity = "tangential";
    std::string output = "csv";
  } names;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output", names.output, "Output format: csv or json")
        ->check(CLI::IsMember(formats, CLI::ignore_case))
        ->default_str("csv");
    sub->add_option("--tol", config.tol, "Relative tolerance (env VACUUM_TOL overrides the default)")
        ->default_str("1e-8");
  };
  auto add_physics = [&](CLI::App* sub, bool with_route) {
    sub->add_option("--boundary", names.boundary, "Plate pair: cc or cp")
        ->check(CLI::IsMember(boundaries, CLI::ignore_case))
        ->default_str("cc");
    if (with_route) {
      sub->add_option("--route", names.route, "analytic (exact finite parts) or numeric (extrapolated)")
          ->check(CLI::IsMember(routes, CLI::ignore_case))
          ->default_str("analytic");
    }
    sub->add_option("--family", names.family, "Cutoff family for numeric work: exp, gauss, sharp")
        ->check(CLI::IsMember(families, CLI::ignore_case))
        ->default_str("exp");
    sub->add_option("--lambda-grid", config.lambda_grid,
                    "Comma-separated, strictly decreasing cutoff sharpness values")
        ->delimiter(',')
        ->default_str("0.5,0.25,0.125,0.0625");
  };
  auto add_separation = [&](CLI::App* sub) {
    sub->add_option("--d", config.d, "Plate separation in meters")->default_str("1e-6");
  };

  auto* pressure = app.add_subcommand("pressure", "Reduced and SI pressure or energy density");
  add_physics(pressure, true);
  pressure->add_option("--quantity", names.quantity, "tangential, normal or energy")
      ->check(CLI::IsMember(quantities, CLI::ignore_case))
      ->default_str("tangential");
  add_separation(pressure);
  add_common(pressure);

  auto* force = app.add_subcommand("force", "Tangential force on the upper plate in newtons");
  add_physics(force, true);
  add_separation(force);
  force->add_option("--L", config.L, "Plate width in meters")->default_str("1e-2");
  force->add_option("--M", config.M, "Overlap distance in meters (must exceed d)")->default_str("1e-4");
  add_common(force);

  auto* sweep = app.add_subcommand("sweep", "Finite-lambda brackets, one row per lambda");
  add_physics(sweep, false);
  sweep->add_option("--quantity", names.quantity, "tangential, normal or energy")
      ->check(CLI::IsMember(quantities, CLI::ignore_case))
      ->default_str("tangential");
  add_separation(sweep);
  add_common(sweep);

  auto* verify = app.add_subcommand("verify", "Run the built-in invariant suite; exit 0 iff all pass");
  add_common(verify);

  auto* convert = app.add_subcommand("convert", "Convert between reduced units (pi^2 hbar c/d^4) and Pa");
  add_separation(convert);
  auto* reduced_opt = convert->add_option("--reduced", config.reduced_value, "Value in reduced units");
  auto* si_opt = convert->add_option("--si", config.si_value, "Value in pascals");
  reduced_opt->excludes(si_opt);
  convert->add_option("--boundary", names.boundary, "Recorded in JSON output only")
      ->check(CLI::IsMember(boundaries, CLI::ignore_case))
      ->default_str("cc");
  add_common(convert);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  auto lower = [](std::string text) {
    for (auto& c : text) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return text;
  };
  config.boundary = boundaries.at(lower(names.boundary));
  config.route = routes.at(lower(names.route));
  config.family = families.at(lower(names.family));
  config.quantity = quantities.at(lower(names.quantity));
  config.output = formats.at(lower(names.output));

  if (pressure->parsed()) config.command = Command::Pressure;
  if (force->parsed()) config.command = Command::Force;
  if (sweep->parsed()) {
    config.command = Command::Sweep;
    config.route = Route::Numeric;
  }
  if (verify->parsed()) config.command = Command::Verify;
  if (convert->parsed()) config.command = Command::Convert;
  return run(config, out, err);
}

}  // namespace vacuum::cli
