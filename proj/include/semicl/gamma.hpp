#pragma once

#include "semicl/errors.hpp"

namespace semicl {

struct GammaResult {
  double value = 0.0;
  double est_rel_error = 0.0;
};

/// Gamma(x) for x in [0.1, 50] via the Lanczos approximation (g=7, 9 terms).
/// Throws DomainError outside the supported range.
GammaResult gamma(double x);

/// Convenience accessor for call sites that only need the value.
inline double gamma_value(double x) { return gamma(x).value; }

}  // namespace semicl
