#pragma once

#include <optional>

#include "semicl/classical.hpp"
#include "semicl/core.hpp"
#include "semicl/ode.hpp"

namespace semicl {

enum class Stability : std::uint8_t { Stable, Unstable, None };

/// Fixed point of the quantization flow dE/dn = hbar*(1+sE)*omega_cl(E):
/// the energy E_f = -1/s where the right side vanishes. Attracting for
/// s < 0, repelling for s > 0 (omega_cl > 0 fixes the sign).
struct FixedPointInfo {
  bool exists = false;
  std::optional<double> E_f{};
  Stability stability = Stability::None;
};

/// Linear family only; the exponential factor e^{sE} never vanishes, so that
/// family has no finite fixed point (throws UnsupportedDeformation).
FixedPointInfo fixed_point(const Deformation& d);

/// gamma = pi*hbar / (sqrt(2m) * a), the box level-spacing coefficient.
double box_gamma(const QuantumBox& spec, const UnitsConvention& units);

/// Default fundamental level: 0 for the box, hbar*omega0/2 for the
/// oscillator, and the undeformed n = 1/2 estimate for the power-law.
double default_ground_energy(const SystemSpec& spec, const UnitsConvention& units);

/// Levels of dE/dn = hbar * f(E) * omega_cl(E) at integer n, starting from
/// E(0) = E0, with f = (1+sE) or e^{sE}. Stops early on divergence (energy
/// past cfg.divergence_threshold, fractional n_star recorded) or, for s < 0,
/// when the levels have saturated the fixed point to within cfg.abs_tol.
SpectrumResult solve_spectrum_ode(const SystemSpec& spec, const Deformation& d,
                                  double E0, int n_max, const OdeConfig& cfg,
                                  const UnitsConvention& units);

/// Box closed form for s > 0: E_n = (1/s) tan^2(gamma*n*sqrt(s)).
/// Throws OutOfDomain past the tan^2 pole at n >= pi/(2*gamma*sqrt(s)).
double box_spectrum_closed(int n, double s, const QuantumBox& spec,
                           const UnitsConvention& units);

/// Oscillator closed form for linear deformation with s != 0:
/// E_n = (E0 + 1/s) e^{s*hbar*omega0*n} - 1/s.
double oscillator_spectrum_closed(int n, const Deformation& d, const Harmonic& spec,
                                  const UnitsConvention& units);

/// Undeformed (s = 0) semiclassical levels, in closed form for all three
/// systems; the s = 0 reduction oracle.
double undeformed_spectrum_closed(const SystemSpec& spec, int n, double E0,
                                  const UnitsConvention& units);

/// Number of levels a box with s > 0 supports below the tan^2 divergence.
struct BoxCapacity {
  long count = 0;        ///< levels with n >= 1 and finite energy
  bool commensurate = false;  ///< gamma*sqrt(s) = pi/(2k): pole exactly at integer n
};
BoxCapacity box_state_capacity(double s, const QuantumBox& spec,
                               const UnitsConvention& units);

}  // namespace semicl
