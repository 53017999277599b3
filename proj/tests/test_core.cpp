#include <doctest.h>

#include "semicl/core.hpp"

using namespace semicl;

TEST_SUITE("core") {
  TEST_CASE("validate_system accepts positive parameters") {
    CHECK_NOTHROW(validate_system(PowerLaw{1.0, 2.0, 1.0}));
    CHECK_NOTHROW(validate_system(QuantumBox{2.0, 0.5}));
    CHECK_NOTHROW(validate_system(Harmonic{1.0, 0.0}));
  }

  TEST_CASE("validate_system names the violated field") {
    try {
      validate_system(PowerLaw{1.0, 0.0, 1.0});
      FAIL("expected DomainError");
    } catch (const DomainError& e) {
      CHECK(e.field() == "nu");
    }
    try {
      validate_system(QuantumBox{-1.0, 1.0});
      FAIL("expected DomainError");
    } catch (const DomainError& e) {
      CHECK(e.field() == "a");
    }
    CHECK_THROWS_AS(validate_system(Harmonic{1.0, -0.5}), DomainError);
    CHECK_THROWS_AS(validate_units(UnitsConvention{0.0, 1.0}), DomainError);
  }

  TEST_CASE("validation is idempotent") {
    const SystemSpec spec = PowerLaw{1.5, 2.5, 0.5};
    const SystemSpec once = validate_system(spec);
    const SystemSpec twice = validate_system(once);
    const auto& a = std::get<PowerLaw>(once);
    const auto& b = std::get<PowerLaw>(twice);
    CHECK(a.k == b.k);
    CHECK(a.nu == b.nu);
    CHECK(a.m == b.m);
  }

  TEST_CASE("deformation factor enforces the admissibility assumption") {
    const Deformation lin = linear_deformation(-0.5);
    CHECK(lin.factor(1.0) == doctest::Approx(0.5));
    CHECK(lin.factor(2.0) == doctest::Approx(0.0));  // boundary allowed here
    CHECK_THROWS_AS(lin.factor(3.0), PreconditionError);
    CHECK(exponential_deformation(-0.5).factor(10.0) > 0.0);
  }

  TEST_CASE("system names") {
    CHECK(system_name(QuantumBox{}) == "box");
    CHECK(system_name(Harmonic{}) == "harmonic");
    CHECK(system_name(PowerLaw{}) == "powerlaw");
  }
}
