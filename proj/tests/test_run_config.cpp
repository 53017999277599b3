#include <doctest.h>

#include "semicl/run_config.hpp"

using namespace semicl;

TEST_SUITE("run_config") {
  TEST_CASE("defaults round-trip") {
    const RunConfig cfg;
    const RunConfig back = parse_run_config(serialize_run_config(cfg));
    CHECK(back == cfg);
  }

  TEST_CASE("non-default config round-trips") {
    RunConfig cfg;
    cfg.system = PowerLaw{2.0, 3.5, 0.7};
    cfg.deformation = exponential_deformation(-0.25);
    cfg.units = UnitsConvention{2.0, 0.5};
    cfg.ode.rel_tol = 1e-8;
    cfg.ode.max_steps_per_level = 500;
    cfg.quad.singularity_exponent = -0.25;
    cfg.output.format = OutputFormat::Json;
    cfg.output.path = "out.json";
    const RunConfig back = parse_run_config(serialize_run_config(cfg));
    CHECK(back == cfg);
  }

  TEST_CASE("harmonic ground energy survives the round trip") {
    RunConfig cfg;
    cfg.system = Harmonic{2.0, 0.77};
    CHECK(parse_run_config(serialize_run_config(cfg)) == cfg);
    cfg.system = Harmonic{2.0, std::nullopt};
    CHECK(parse_run_config(serialize_run_config(cfg)) == cfg);
  }

  TEST_CASE("serialization is deterministic") {
    RunConfig cfg;
    cfg.system = QuantumBox{1.5, 2.0};
    CHECK(serialize_run_config(cfg) == serialize_run_config(cfg));
  }

  TEST_CASE("unknown keys are rejected") {
    CHECK_THROWS_AS(parse_run_config(R"({"bogus": 1})"), ConfigError);
    CHECK_THROWS_AS(parse_run_config(R"({"system": {"variant": "box", "radius": 2}})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_run_config(R"({"ode": {"reltol": 1e-9}})"), ConfigError);
  }

  TEST_CASE("malformed documents") {
    CHECK_THROWS_AS(parse_run_config("not json at all"), ConfigError);
    CHECK_THROWS_AS(parse_run_config(R"([1, 2, 3])"), ConfigError);
    CHECK_THROWS_AS(parse_run_config(R"({"system": {"variant": "ring"}})"), ConfigError);
    CHECK_THROWS_AS(parse_run_config(R"({"deformation": {"family": "cubic"}})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_run_config(R"({"system": {"variant": "box", "a": "wide"}})"),
                    ConfigError);
  }
}
