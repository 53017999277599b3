#pragma once

#include <functional>
#include <optional>

#include "semicl/errors.hpp"

namespace semicl {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  int max_subdivisions = 200;
  /// Power p of the integrand's algebraic behaviour (x - lower)^p at the
  /// lower endpoint; must be > -1. Unset means no endpoint singularity.
  std::optional<double> singularity_exponent{};
};

void validate(const QuadratureConfig& cfg);

struct IntegralResult {
  double value = 0.0;
  double est_abs_error = 0.0;
  int subdivisions_used = 0;
  /// False when the subdivision budget ran out first; value is then the best
  /// available estimate (the ToleranceNotMet condition).
  bool tolerance_met = true;
};

/// Adaptive Gauss-Kronrod 15 integration of f over [lower, upper], or
/// [lower, inf) when upper is unset. Endpoint singularities declared via
/// cfg.singularity_exponent are removed by the substitution x = a + u^{1/(1+p)};
/// the infinite tail is folded onto [0,1) by x = a + 1 + t/(1-t).
IntegralResult integrate_semi_infinite(const std::function<double(double)>& f,
                                       double lower, std::optional<double> upper,
                                       const QuadratureConfig& cfg);

/// Central finite difference with one Richardson extrapolation level,
/// step h = T * 1e-4; observed order >= 4. order 1 -> df/dT, 2 -> d2f/dT2.
double derivative(const std::function<double(double)>& f, double T, int order = 1);

}  // namespace semicl
