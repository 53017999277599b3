#include <cmath>
#include <cstdint>

#include <doctest.h>

#include "semicl/gamma.hpp"

using namespace semicl;

namespace {

// 40-digit reference values (mpmath).
struct Ref {
  double x;
  double value;
};
constexpr Ref kReference[] = {
    {0.1, 9.5135076986687318363},   {0.2337, 3.8935164437702532898},
    {1.5, 0.88622692545275801365},  {2.5, 1.3293403881791370205},
    {3.5, 3.3233509704478425512},   {3.7, 4.1706517837966031654},
    {12.34, 92044896.63696860079},  {50.0, 6.0828186403426756087e62},
};

double next_uniform(std::uint64_t& state) {
  state = state * 6364136223846793005ULL + 1442695040888963407ULL;
  return static_cast<double>(state >> 11) * 0x1.0p-53;
}

}  // namespace

TEST_SUITE("gamma") {
  TEST_CASE("known closed forms") {
    CHECK(semicl::gamma(1.0).value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(semicl::gamma(0.5).value == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
    CHECK(semicl::gamma(1.5).value == doctest::Approx(0.5 * std::sqrt(M_PI)).epsilon(1e-14));
  }

  TEST_CASE("reference values across the supported range") {
    for (const Ref& r : kReference) {
      const GammaResult g = semicl::gamma(r.x);
      CHECK(std::abs(g.value - r.value) / r.value < 1e-12);
      CHECK(g.est_rel_error <= 1e-12);
    }
  }

  TEST_CASE("recurrence gamma(x+1) = x gamma(x)") {
    std::uint64_t state = 42;
    for (int i = 0; i < 1000; ++i) {
      const double x = 0.1 + next_uniform(state) * (49.0 - 0.1);
      const double lhs = semicl::gamma(x + 1.0).value;
      const double rhs = x * semicl::gamma(x).value;
      CHECK(std::abs(lhs - rhs) / lhs < 1e-12);
    }
  }

  TEST_CASE("domain limits") {
    CHECK_THROWS_AS(semicl::gamma(0.05), DomainError);
    CHECK_THROWS_AS(semicl::gamma(50.5), DomainError);
    CHECK_THROWS_AS(semicl::gamma(-1.0), DomainError);
    CHECK_NOTHROW(semicl::gamma(0.1));
    CHECK_NOTHROW(semicl::gamma(50.0));
  }
}
