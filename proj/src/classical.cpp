#include "semicl/classical.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "semicl/gamma.hpp"

namespace semicl {

double alpha_coefficient(double k, double nu, double m, const UnitsConvention&) {
  validate_system(PowerLaw{k, nu, m});
  const double g_half = gamma_value(0.5 + 1.0 / nu);
  const double g_inv = gamma_value(1.0 / nu);
  return std::sqrt(2.0 * std::numbers::pi) * nu * std::pow(k, 1.0 / nu) * g_half /
         (2.0 * std::sqrt(m) * g_inv);
}

FrequencyLaw frequency_law(const SystemSpec& spec, const UnitsConvention& units) {
  validate_system(spec);
  return std::visit(
      [&](const auto& s) -> FrequencyLaw {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, QuantumBox>) {
          // omega_cl = (pi/a) sqrt(2E/m)
          return {std::numbers::pi / s.a * std::sqrt(2.0 / s.m), 0.5};
        } else if constexpr (std::is_same_v<T, Harmonic>) {
          return {s.omega0, 0.0};
        } else {
          return {alpha_coefficient(s.k, s.nu, s.m, units), 0.5 - 1.0 / s.nu};
        }
      },
      spec);
}

double eval_frequency(const FrequencyLaw& law, double energy) {
  if (energy < 0.0)
    throw DomainError("E", "frequency undefined for E < 0");
  if (energy == 0.0) {
    if (law.exponent < 0.0)
      throw DomainError("E", "frequency diverges at E = 0 for exponent " +
                                 std::to_string(law.exponent));
    return law.exponent == 0.0 ? law.prefactor : 0.0;
  }
  return law.prefactor * std::pow(energy, law.exponent);
}

}  // namespace semicl
