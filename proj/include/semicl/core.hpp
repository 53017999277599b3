#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "semicl/errors.hpp"

namespace semicl {

/// Unit conventions. Natural units hbar = k_B = 1 by default; both constants
/// stay symbolic in every formula so other conventions multiply through.
/// Temperatures enter the formulas only as the thermal energy k_B * T.
struct UnitsConvention {
  double hbar = 1.0;
  double boltzmann = 1.0;
};

/// Infinite well of width a, particle mass m.
struct QuantumBox {
  double a = 1.0;
  double m = 1.0;
};

/// 1D oscillator with classical frequency omega0. ground_energy defaults to
/// hbar*omega0/2 when unset.
struct Harmonic {
  double omega0 = 1.0;
  std::optional<double> ground_energy{};
};

/// Potential k*|x|^nu with nu > 0, particle mass m.
struct PowerLaw {
  double k = 1.0;
  double nu = 2.0;
  double m = 1.0;
};

using SystemSpec = std::variant<QuantumBox, Harmonic, PowerLaw>;

enum class DeformationFamily : std::uint8_t { Linear, Exponential };

/// Deformation of the elementary action: hbar -> hbar*(1+sE) (Linear) or
/// hbar -> hbar*e^{sE} (Exponential); s has inverse-energy units.
struct Deformation {
  DeformationFamily family = DeformationFamily::Linear;
  double s = 0.0;

  /// Multiplier applied to hbar at energy E. Throws PreconditionError when
  /// the linear factor goes negative (the theory assumes (1+sE) >= 0).
  double factor(double energy) const {
    if (family == DeformationFamily::Linear) {
      const double f = 1.0 + s * energy;
      if (f < 0.0)
        throw PreconditionError("(1+sE) < 0 at E=" + std::to_string(energy));
      return f;
    }
    return std::exp(s * energy);
  }
};

inline Deformation linear_deformation(double s) {
  return Deformation{DeformationFamily::Linear, s};
}
inline Deformation exponential_deformation(double s) {
  return Deformation{DeformationFamily::Exponential, s};
}

/// One quantized level: integer index and its energy.
struct Level {
  int n = 0;
  double energy = 0.0;
};

/// Why a spectrum computation stopped emitting levels.
struct LevelCapReached {};
struct DivergenceDetected {
  double n_star = 0.0;  ///< fractional index where the energy blows up
};
struct FixedPointSaturated {
  double E_f = 0.0;  ///< stable fixed point -1/s the levels accumulate at
};
using SpectrumCutoff =
    std::variant<LevelCapReached, DivergenceDetected, FixedPointSaturated>;

enum class SpectrumMethod : std::uint8_t { ClosedForm, OdeIntegration };

struct SpectrumResult {
  std::vector<Level> levels;
  SpectrumCutoff cutoff = LevelCapReached{};
  SpectrumMethod method = SpectrumMethod::OdeIntegration;
};

enum class ThermoRoute : std::uint8_t { ExactQuadrature, FirstOrder, ClosedForm };

/// One thermodynamic sample. Z is absent on routes that never form a
/// partition function (the first-order formulas need only U0(T)).
struct ThermoPoint {
  double T = 0.0;
  std::optional<double> Z{};
  double U = 0.0;
  double C = 0.0;
  ThermoRoute route = ThermoRoute::ExactQuadrature;
};

/// Checks all positivity invariants; returns the spec unchanged on success.
/// Throws DomainError naming the offending field.
SystemSpec validate_system(const SystemSpec& spec);

void validate_units(const UnitsConvention& units);

/// Human-readable tag for diagnostics and CLI output.
std::string system_name(const SystemSpec& spec);

}  // namespace semicl
