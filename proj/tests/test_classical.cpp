#include <cmath>
#include <cstdint>
#include <numbers>

#include <doctest.h>

#include "semicl/classical.hpp"
#include "semicl/oracles.hpp"

using namespace semicl;

namespace {

double next_uniform(std::uint64_t& state, double lo, double hi) {
  state = state * 6364136223846793005ULL + 1442695040888963407ULL;
  return lo + (hi - lo) * static_cast<double>(state >> 11) * 0x1.0p-53;
}

const UnitsConvention kUnits{};

}  // namespace

TEST_SUITE("classical") {
  TEST_CASE("alpha coefficient") {
    // nu = 2 reduces to sqrt(2k/m); nu = 1 and a generic triple are frozen
    // from 40-digit evaluation.
    CHECK(alpha_coefficient(0.5, 2.0, 1.0, kUnits) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(alpha_coefficient(1.0, 2.0, 1.0, kUnits) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(alpha_coefficient(1.0, 1.0, 1.0, kUnits) ==
          doctest::Approx(1.1107207345395915618).epsilon(1e-12));
    CHECK(alpha_coefficient(2.0, 3.0, 1.5, kUnits) ==
          doctest::Approx(1.6297768960289301209).epsilon(1e-12));
  }

  TEST_CASE("frequency laws per system") {
    const FrequencyLaw box = frequency_law(QuantumBox{std::numbers::pi, 1.0}, kUnits);
    CHECK(box.prefactor == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(box.exponent == 0.5);

    const FrequencyLaw osc = frequency_law(Harmonic{3.0}, kUnits);
    CHECK(osc.prefactor == 3.0);
    CHECK(osc.exponent == 0.0);

    const FrequencyLaw pl = frequency_law(PowerLaw{0.5, 2.0, 1.0}, kUnits);
    CHECK(pl.prefactor == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pl.exponent == doctest::Approx(0.0));
  }

  TEST_CASE("nu=2 power law reproduces the oscillator for random parameters") {
    std::uint64_t state = 7;
    for (int i = 0; i < 100; ++i) {
      const double m = next_uniform(state, 0.2, 5.0);
      const double omega0 = next_uniform(state, 0.2, 5.0);
      const FrequencyLaw pl =
          frequency_law(PowerLaw{0.5 * m * omega0 * omega0, 2.0, m}, kUnits);
      CHECK(std::abs(pl.prefactor - omega0) / omega0 < 1e-12);
      CHECK(std::abs(pl.exponent) < 1e-15);
    }
  }

  TEST_CASE("eval_frequency") {
    CHECK(eval_frequency({1.0, 0.0}, 17.0) == 1.0);
    CHECK(eval_frequency({std::sqrt(2.0), 0.5}, 2.0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(eval_frequency({2.0, 0.5}, 0.0) == 0.0);
    CHECK(eval_frequency({3.0, 0.0}, 0.0) == 3.0);
    CHECK_THROWS_AS(eval_frequency({1.1107207, -0.5}, 0.0), DomainError);
    CHECK_THROWS_AS(eval_frequency({1.0, 0.5}, -1.0), DomainError);

    // Monotone increasing for positive exponent, decreasing for negative.
    CHECK(eval_frequency({1.0, 0.5}, 4.0) > eval_frequency({1.0, 0.5}, 1.0));
    CHECK(eval_frequency({1.0, -0.25}, 4.0) < eval_frequency({1.0, -0.25}, 1.0));
  }

  TEST_CASE("frequency law matches the turning-point period oracle") {
    std::uint64_t state = 99;
    for (int i = 0; i < 20; ++i) {
      const double k = next_uniform(state, 0.3, 3.0);
      const double nu = next_uniform(state, 0.6, 6.0);
      const double E = next_uniform(state, 0.5, 5.0);
      const double omega =
          alpha_coefficient(k, nu, 1.0, kUnits) * std::pow(E, 0.5 - 1.0 / nu);
      const double period = power_law_period(k, nu, 1.0, E);
      CHECK(std::abs(2.0 * std::numbers::pi / period - omega) / omega < 1e-6);
    }
  }

  TEST_CASE("validation") {
    CHECK_THROWS_AS(alpha_coefficient(1.0, 0.0, 1.0, kUnits), DomainError);
    CHECK_THROWS_AS(frequency_law(QuantumBox{-1.0, 1.0}, kUnits), DomainError);
    CHECK_THROWS_AS(frequency_law(PowerLaw{1.0, 2.0, -1.0}, kUnits), DomainError);
  }
}
