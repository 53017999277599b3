#pragma once

#include <string>
#include <vector>

namespace semicl {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  ///< worst observed deviation or failure description
};

/// Runs the built-in cross-validation battery: closed forms against ODE
/// integration, quadrature against Gamma identities, exact against
/// first-order thermodynamics, the effective-temperature identity, and the
/// classical-period oracle. Deterministic (fixed RNG seed).
std::vector<CheckResult> run_selftest();

}  // namespace semicl
