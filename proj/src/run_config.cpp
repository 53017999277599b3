#include "semicl/run_config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace semicl {

namespace {

using Json = nlohmann::ordered_json;

void reject_unknown(const Json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
  for (const auto& [key, _] : obj.items())
    if (!allowed.contains(key))
      throw ConfigError("unknown key \"" + key + "\" in " + where);
}

double number(const Json& obj, const char* key, double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number()) throw ConfigError(std::string(key) + " must be a number");
  return obj[key].get<double>();
}

SystemSpec parse_system(const Json& j) {
  if (!j.is_object() || !j.contains("variant"))
    throw ConfigError("system must be an object with a \"variant\" key");
  const std::string variant = j["variant"].get<std::string>();
  if (variant == "box") {
    reject_unknown(j, {"variant", "a", "m"}, "system");
    return QuantumBox{number(j, "a", 1.0), number(j, "m", 1.0)};
  }
  if (variant == "harmonic") {
    reject_unknown(j, {"variant", "omega0", "ground_energy"}, "system");
    Harmonic h{number(j, "omega0", 1.0), std::nullopt};
    if (j.contains("ground_energy") && !j["ground_energy"].is_null())
      h.ground_energy = j["ground_energy"].get<double>();
    return h;
  }
  if (variant == "powerlaw") {
    reject_unknown(j, {"variant", "k", "nu", "m"}, "system");
    return PowerLaw{number(j, "k", 1.0), number(j, "nu", 2.0), number(j, "m", 1.0)};
  }
  throw ConfigError("unknown system variant \"" + variant + "\"");
}

Deformation parse_deformation(const Json& j) {
  reject_unknown(j, {"family", "s"}, "deformation");
  Deformation d;
  if (j.contains("family")) {
    const std::string family = j["family"].get<std::string>();
    if (family == "linear")
      d.family = DeformationFamily::Linear;
    else if (family == "exponential")
      d.family = DeformationFamily::Exponential;
    else
      throw ConfigError("unknown deformation family \"" + family + "\"");
  }
  d.s = number(j, "s", 0.0);
  return d;
}

}  // namespace

RunConfig parse_run_config(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config root must be a JSON object");
  reject_unknown(j, {"system", "deformation", "units", "ode", "quad", "output"},
                 "config");

  RunConfig cfg;
  try {
    if (j.contains("system")) cfg.system = parse_system(j["system"]);
    if (j.contains("deformation")) cfg.deformation = parse_deformation(j["deformation"]);
    if (j.contains("units")) {
      const Json& u = j["units"];
      reject_unknown(u, {"hbar", "boltzmann"}, "units");
      cfg.units.hbar = number(u, "hbar", 1.0);
      cfg.units.boltzmann = number(u, "boltzmann", 1.0);
    }
    if (j.contains("ode")) {
      const Json& o = j["ode"];
      reject_unknown(o, {"rel_tol", "abs_tol", "max_steps_per_level", "divergence_threshold"},
                     "ode");
      cfg.ode.rel_tol = number(o, "rel_tol", cfg.ode.rel_tol);
      cfg.ode.abs_tol = number(o, "abs_tol", cfg.ode.abs_tol);
      if (o.contains("max_steps_per_level"))
        cfg.ode.max_steps_per_level = o["max_steps_per_level"].get<int>();
      cfg.ode.divergence_threshold =
          number(o, "divergence_threshold", cfg.ode.divergence_threshold);
    }
    if (j.contains("quad")) {
      const Json& q = j["quad"];
      reject_unknown(q, {"rel_tol", "max_subdivisions", "singularity_exponent"}, "quad");
      cfg.quad.rel_tol = number(q, "rel_tol", cfg.quad.rel_tol);
      if (q.contains("max_subdivisions"))
        cfg.quad.max_subdivisions = q["max_subdivisions"].get<int>();
      if (q.contains("singularity_exponent") && !q["singularity_exponent"].is_null())
        cfg.quad.singularity_exponent = q["singularity_exponent"].get<double>();
    }
    if (j.contains("output")) {
      const Json& o = j["output"];
      reject_unknown(o, {"format", "path"}, "output");
      if (o.contains("format")) {
        const std::string fmt = o["format"].get<std::string>();
        if (fmt == "csv")
          cfg.output.format = OutputFormat::Csv;
        else if (fmt == "json")
          cfg.output.format = OutputFormat::Json;
        else
          throw ConfigError("unknown output format \"" + fmt + "\"");
      }
      if (o.contains("path")) cfg.output.path = o["path"].get<std::string>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed config value: ") + e.what());
  }
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_run_config(buf.str());
}

std::string serialize_run_config(const RunConfig& cfg) {
  Json j;
  Json system;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, QuantumBox>) {
          system["variant"] = "box";
          system["a"] = s.a;
          system["m"] = s.m;
        } else if constexpr (std::is_same_v<T, Harmonic>) {
          system["variant"] = "harmonic";
          system["omega0"] = s.omega0;
          if (s.ground_energy)
            system["ground_energy"] = *s.ground_energy;
          else
            system["ground_energy"] = nullptr;
        } else {
          system["variant"] = "powerlaw";
          system["k"] = s.k;
          system["nu"] = s.nu;
          system["m"] = s.m;
        }
      },
      cfg.system);
  j["system"] = system;
  j["deformation"] = {
      {"family", cfg.deformation.family == DeformationFamily::Linear ? "linear"
                                                                     : "exponential"},
      {"s", cfg.deformation.s}};
  j["units"] = {{"hbar", cfg.units.hbar}, {"boltzmann", cfg.units.boltzmann}};
  j["ode"] = {{"rel_tol", cfg.ode.rel_tol},
              {"abs_tol", cfg.ode.abs_tol},
              {"max_steps_per_level", cfg.ode.max_steps_per_level},
              {"divergence_threshold", cfg.ode.divergence_threshold}};
  j["quad"] = {{"rel_tol", cfg.quad.rel_tol},
               {"max_subdivisions", cfg.quad.max_subdivisions}};
  if (cfg.quad.singularity_exponent)
    j["quad"]["singularity_exponent"] = *cfg.quad.singularity_exponent;
  else
    j["quad"]["singularity_exponent"] = nullptr;
  j["output"] = {
      {"format", cfg.output.format == OutputFormat::Csv ? "csv" : "json"},
      {"path", cfg.output.path}};
  return j.dump(2);
}

bool operator==(const RunConfig& a, const RunConfig& b) {
  return serialize_run_config(a) == serialize_run_config(b);
}

}  // namespace semicl
