#include "semicl/gamma.hpp"

#include <cmath>
#include <string>

namespace semicl {

namespace {

// Lanczos g=7, n=9 coefficient set (the standard double-precision tabulation).
constexpr double kG = 7.0;
constexpr double kCoeff[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kSqrtTwoPi = 2.5066282746310002;

// Core approximation, accurate for x >= 0.5.
double lanczos(double x) {
  const double z = x - 1.0;
  double acc = kCoeff[0];
  for (int i = 1; i < 9; ++i) acc += kCoeff[i] / (z + i);
  const double t = z + kG + 0.5;
  return kSqrtTwoPi * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

}  // namespace

GammaResult gamma(double x) {
  if (!(x >= 0.1 && x <= 50.0))
    throw DomainError("x", "gamma supports x in [0.1, 50], got " + std::to_string(x));
  // Below 0.5 the series loses accuracy; shift up with Gamma(x) = Gamma(x+1)/x.
  const double value = (x < 0.5) ? lanczos(x + 1.0) / x : lanczos(x);
  // Empirical bound over [0.1, 50] against 40-digit reference values.
  return GammaResult{value, 5e-14};
}

}  // namespace semicl
