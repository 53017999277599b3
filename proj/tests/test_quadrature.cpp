#include <cmath>
#include <cstdint>

#include <doctest.h>

#include "semicl/gamma.hpp"
#include "semicl/quadrature.hpp"

using namespace semicl;

namespace {

double next_uniform(std::uint64_t& state, double lo, double hi) {
  state = state * 6364136223846793005ULL + 1442695040888963407ULL;
  return lo + (hi - lo) * static_cast<double>(state >> 11) * 0x1.0p-53;
}

QuadratureConfig with_exponent(double p) {
  QuadratureConfig cfg;
  cfg.singularity_exponent = p;
  return cfg;
}

}  // namespace

TEST_SUITE("quadrature") {
  TEST_CASE("unit exponential integral") {
    const IntegralResult r =
        integrate_semi_infinite([](double x) { return std::exp(-x); }, 0.0, std::nullopt, {});
    CHECK(r.tolerance_met);
    CHECK(std::abs(r.value - 1.0) < 1e-10);
    CHECK(r.est_abs_error < 1e-9);
  }

  TEST_CASE("complete Gamma integrals with algebraic endpoints") {
    const IntegralResult half = integrate_semi_infinite(
        [](double x) { return std::exp(-x) * std::sqrt(x); }, 0.0, std::nullopt,
        with_exponent(0.5));
    CHECK(std::abs(half.value - 0.88622692545275801365) / 0.886 < 1e-8);

    const IntegralResult inv_half = integrate_semi_infinite(
        [](double x) { return std::exp(-x) / std::sqrt(x); }, 0.0, std::nullopt,
        with_exponent(-0.5));
    CHECK(std::abs(inv_half.value - 1.7724538509055160273) / 1.77 < 1e-8);
  }

  TEST_CASE("Gamma-identity property over random exponents") {
    std::uint64_t state = 2024;
    for (int i = 0; i < 50; ++i) {
      const double p = next_uniform(state, -0.5, 3.0);
      const IntegralResult r = integrate_semi_infinite(
          [p](double x) { return std::exp(-x) * std::pow(x, p); }, 0.0, std::nullopt,
          with_exponent(p));
      const double want = gamma_value(p + 1.0);
      CHECK(std::abs(r.value - want) / want < 1e-8);
    }
  }

  TEST_CASE("finite intervals") {
    const IntegralResult a =
        integrate_semi_infinite([](double x) { return std::exp(-x); }, 0.0, 1.0, {});
    CHECK(std::abs(a.value - 0.6321205588285576784) < 1e-12);

    const IntegralResult b =
        integrate_semi_infinite([](double x) { return 1.0 / x; }, 1.0, 2.0, {});
    CHECK(std::abs(b.value - std::log(2.0)) < 1e-12);

    // Finite interval with an endpoint singularity: int_0^1 x^{-1/2} = 2.
    const IntegralResult c = integrate_semi_infinite(
        [](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, with_exponent(-0.5));
    CHECK(std::abs(c.value - 2.0) < 1e-10);
  }

  TEST_CASE("failure modes") {
    CHECK_THROWS_AS(integrate_semi_infinite([](double x) { return 1.0 / x; }, 0.0,
                                            std::nullopt, with_exponent(-1.0)),
                    SingularityTooStrong);
    CHECK_THROWS_AS(
        integrate_semi_infinite([](double) { return std::nan(""); }, 0.0, 1.0, {}),
        EvaluationError);

    QuadratureConfig tiny;
    tiny.max_subdivisions = 1;
    const IntegralResult starved = integrate_semi_infinite(
        [](double x) { return std::cos(50.0 * x) * std::exp(-x); }, 0.0, std::nullopt, tiny);
    CHECK_FALSE(starved.tolerance_met);

    QuadratureConfig bad;
    bad.rel_tol = 0.5;
    CHECK_THROWS_AS(
        integrate_semi_infinite([](double x) { return std::exp(-x); }, 0.0, std::nullopt, bad),
        ConfigError);
  }

  TEST_CASE("first derivatives") {
    CHECK(std::abs(derivative([](double t) { return t * t; }, 3.0, 1) - 6.0) < 1e-8);
    // Ideal-gas energy with N = 1, s = 0.1: dU/dT at T = 1 is 0.4.
    CHECK(std::abs(derivative([](double t) { return 0.5 * t * (1.0 - 0.1 * t); }, 1.0, 1) -
                   0.4) < 1e-10);
    CHECK(std::abs(derivative([](double t) { return t * t * t * t; }, 2.0, 1) - 32.0) /
              32.0 < 1e-8);
  }

  TEST_CASE("second derivatives") {
    CHECK(std::abs(derivative([](double t) { return t * t * t * t; }, 1.5, 2) - 27.0) /
              27.0 < 1e-7);
  }

  TEST_CASE("Richardson beats the plain central difference") {
    // For f = e^{2t} at T = 1 a second-order stencil at h = 1e-4 is off by
    // about 1e-7; the extrapolated result must land far below that.
    const double want = 2.0 * std::exp(2.0);
    const double got = derivative([](double t) { return std::exp(2.0 * t); }, 1.0, 1);
    CHECK(std::abs(got - want) < 1e-9);
  }

  TEST_CASE("derivative domain") {
    CHECK_THROWS_AS(derivative([](double t) { return t; }, 0.0, 1), DomainError);
    CHECK_THROWS_AS(derivative([](double t) { return t; }, 1.0, 3), DomainError);
    CHECK_THROWS_AS(derivative([](double) { return std::nan(""); }, 1.0, 1),
                    EvaluationError);
  }
}
