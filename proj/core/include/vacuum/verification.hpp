#pragma once

#include <string>
#include <vector>

namespace vacuum {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Built-in self-test of the invariants: analytic values, both numeric
/// routes, the finite-lambda closed form, family independence, the pressure
/// identity, SI force and energy balance. Takes a few seconds.
std::vector<CheckResult> run_verification(double tol = 1e-8);

}  // namespace vacuum
