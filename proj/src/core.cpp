#include "semicl/core.hpp"

namespace semicl {

namespace {

void require_positive(double v, const char* field) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw DomainError(field, "must be strictly positive, got " + std::to_string(v));
}

}  // namespace

SystemSpec validate_system(const SystemSpec& spec) {
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, QuantumBox>) {
          require_positive(s.a, "a");
          require_positive(s.m, "m");
        } else if constexpr (std::is_same_v<T, Harmonic>) {
          require_positive(s.omega0, "omega0");
          if (s.ground_energy && (!(*s.ground_energy >= 0.0) || !std::isfinite(*s.ground_energy)))
            throw DomainError("ground_energy", "must be >= 0");
        } else {
          require_positive(s.k, "k");
          require_positive(s.nu, "nu");
          require_positive(s.m, "m");
        }
      },
      spec);
  return spec;
}

void validate_units(const UnitsConvention& units) {
  require_positive(units.hbar, "hbar");
  require_positive(units.boltzmann, "boltzmann");
}

std::string system_name(const SystemSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, QuantumBox>)
          return "box";
        else if constexpr (std::is_same_v<T, Harmonic>)
          return "harmonic";
        else
          return "powerlaw";
      },
      spec);
}

}  // namespace semicl
