#pragma once

#include "semicl/quadrature.hpp"

namespace semicl {

/// Oscillation period of the orbit with energy E in U(x) = k|x|^nu, by direct
/// quadrature between the turning points (substituted so the integrand is
/// bounded). Cross-validation oracle for the closed-form frequency law.
double power_law_period(double k, double nu, double m, double E,
                        const QuadratureConfig& cfg = {});

}  // namespace semicl
