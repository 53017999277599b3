#pragma once

#include "semicl/core.hpp"

namespace semicl {

/// Classical oscillation frequency as a power law of the orbit energy:
/// omega_cl(E) = prefactor * E^exponent. The exponent is 1/2 for the box,
/// 0 for the oscillator, and 1/2 - 1/nu for k|x|^nu.
struct FrequencyLaw {
  double prefactor = 1.0;
  double exponent = 0.0;
};

/// Frequency coefficient for the power-law potential k|x|^nu:
///   alpha(k, nu) = sqrt(2 pi) * nu * k^{1/nu} * Gamma(1/2 + 1/nu)
///                  / (2 sqrt(m) * Gamma(1/nu))
double alpha_coefficient(double k, double nu, double m, const UnitsConvention& units);

FrequencyLaw frequency_law(const SystemSpec& spec, const UnitsConvention& units);

/// prefactor * E^exponent. E = 0 is allowed only for exponent >= 0
/// (0^0 treated as 1); for negative exponents the frequency diverges there.
double eval_frequency(const FrequencyLaw& law, double energy);

}  // namespace semicl
