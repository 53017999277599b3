#pragma once

#include <string>

#include "semicl/core.hpp"
#include "semicl/ode.hpp"
#include "semicl/quadrature.hpp"

namespace semicl {

enum class OutputFormat : std::uint8_t { Csv, Json };

struct OutputConfig {
  OutputFormat format = OutputFormat::Csv;
  std::string path = "-";  ///< "-" writes to standard output
};

/// Everything a run needs, deserializable from a single JSON document.
/// Unknown keys are rejected (ConfigError) to catch typos early.
struct RunConfig {
  SystemSpec system = Harmonic{};
  Deformation deformation{};
  UnitsConvention units{};
  OdeConfig ode{};
  QuadratureConfig quad{};
  OutputConfig output{};
};

RunConfig parse_run_config(const std::string& json_text);
RunConfig load_run_config(const std::string& path);

/// Deterministic serialization (fixed key order); parse(serialize(c)) == c.
std::string serialize_run_config(const RunConfig& cfg);

bool operator==(const RunConfig& a, const RunConfig& b);

}  // namespace semicl
