#include "semicl/oracles.hpp"

#include <cmath>

#include "semicl/core.hpp"

namespace semicl {

double power_law_period(double k, double nu, double m, double E,
                        const QuadratureConfig& cfg) {
  validate_system(PowerLaw{k, nu, m});
  if (!(E > 0.0)) throw DomainError("E", "orbit energy must be > 0");

  // T = 4 * x_t * sqrt(m/2E) * I, x_t = (E/k)^{1/nu},
  // I = int_0^1 du / sqrt(1 - u^nu). The substitution u = 1 - t^2 removes the
  // inverse-square-root turning-point singularity:
  // I = int_0^1 2t / sqrt(1 - (1-t^2)^nu) dt.
  auto integrand = [nu](double t) {
    const double u = 1.0 - t * t;
    const double denom = 1.0 - std::pow(u, nu);
    if (denom <= 0.0) return 2.0 / std::sqrt(nu);  // t -> 0 limit
    return 2.0 * t / std::sqrt(denom);
  };
  const IntegralResult I = integrate_semi_infinite(integrand, 0.0, 1.0, cfg);
  const double x_t = std::pow(E / k, 1.0 / nu);
  return 4.0 * x_t * std::sqrt(m / (2.0 * E)) * I.value;
}

}  // namespace semicl
