// semicl command-line frontend: spectra, densities of states, thermodynamic
// curves and parameter sweeps as CSV or JSON tables.

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "semicl/classical.hpp"
#include "semicl/core.hpp"
#include "semicl/run_config.hpp"
#include "semicl/selftest.hpp"
#include "semicl/spectrum.hpp"
#include "semicl/statmech.hpp"
#include "semicl/version.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace semicl;

// Shortest round-trip decimal; identical configs must yield byte-identical
// output, so all float formatting funnels through here.
std::string fmt(double v) {
  char buf[40];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

struct Cell {
  enum class Kind { Empty, Number, Integer, Text } kind = Kind::Empty;
  double num = 0.0;
  long integer = 0;
  std::string text;

  Cell() = default;
  Cell(double v) : kind(Kind::Number), num(v) {}
  Cell(long v) : kind(Kind::Integer), integer(v) {}
  Cell(int v) : kind(Kind::Integer), integer(v) {}
  Cell(std::string v) : kind(Kind::Text), text(std::move(v)) {}
};

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  Json metadata = Json::object();
};

void write_csv(const Table& t, std::ostream& os) {
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    os << (i ? "," : "") << csv_escape(t.columns[i]);
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ",";
      switch (row[i].kind) {
        case Cell::Kind::Empty: break;
        case Cell::Kind::Number: os << fmt(row[i].num); break;
        case Cell::Kind::Integer: os << row[i].integer; break;
        case Cell::Kind::Text: os << csv_escape(row[i].text); break;
      }
    }
    os << "\n";
  }
  for (const auto& [key, value] : t.metadata.items())
    os << "# " << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump())
       << "\n";
}

void write_json(const Table& t, std::ostream& os) {
  Json doc;
  Json records = Json::array();
  for (const auto& row : t.rows) {
    Json rec = Json::object();
    for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i) {
      switch (row[i].kind) {
        case Cell::Kind::Empty: rec[t.columns[i]] = nullptr; break;
        case Cell::Kind::Number: rec[t.columns[i]] = row[i].num; break;
        case Cell::Kind::Integer: rec[t.columns[i]] = row[i].integer; break;
        case Cell::Kind::Text: rec[t.columns[i]] = row[i].text; break;
      }
    }
    records.push_back(std::move(rec));
  }
  doc["records"] = std::move(records);
  doc["metadata"] = t.metadata;
  os << doc.dump(2) << "\n";
}

void emit(const Table& t, const RunConfig& cfg) {
  std::ostringstream body;
  if (cfg.output.format == OutputFormat::Csv)
    write_csv(t, body);
  else
    write_json(t, body);
  if (cfg.output.path == "-") {
    std::cout << body.str();
  } else {
    std::ofstream out(cfg.output.path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file " + cfg.output.path);
    out << body.str();
  }
}

Json base_metadata(const RunConfig& cfg) {
  Json meta;
  meta["version"] = kVersion;
  meta["config"] = Json::parse(serialize_run_config(cfg));
  return meta;
}

Json cutoff_json(const SpectrumCutoff& c) {
  Json j;
  if (std::holds_alternative<LevelCapReached>(c)) {
    j["type"] = "LevelCapReached";
  } else if (const auto* d = std::get_if<DivergenceDetected>(&c)) {
    j["type"] = "DivergenceDetected";
    j["n_star"] = d->n_star;
  } else {
    j["type"] = "FixedPointSaturated";
    j["E_f"] = std::get<FixedPointSaturated>(c).E_f;
  }
  return j;
}

// ---------------------------------------------------------------------------
// Flag plumbing: defaults < config file < flags.

struct Flags {
  std::optional<std::string> config_path, system, family, format, out;
  std::optional<double> a, m, omega0, e0, k, nu, s, hbar, kB;
  std::optional<double> ode_rel, ode_abs, divergence, quad_rel;
  std::optional<int> max_steps, max_subdiv;
};

void add_common_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config_path, "JSON config file (RunConfig schema)");
  cmd->add_option("--system", f.system, "box|harmonic|powerlaw");
  cmd->add_option("--a", f.a, "box width");
  cmd->add_option("--m", f.m, "particle mass (box, powerlaw)");
  cmd->add_option("--omega0", f.omega0, "oscillator frequency");
  cmd->add_option("--e0", f.e0, "ground-state energy override");
  cmd->add_option("--k", f.k, "power-law strength");
  cmd->add_option("--nu", f.nu, "power-law exponent");
  cmd->add_option("--s", f.s, "deformation parameter");
  cmd->add_option("--family", f.family, "linear|exponential");
  cmd->add_option("--hbar", f.hbar, "Planck constant");
  cmd->add_option("--kB", f.kB, "Boltzmann constant");
  cmd->add_option("--format", f.format, "csv|json");
  cmd->add_option("--out", f.out, "output path (- for stdout)");
  cmd->add_option("--ode-rel-tol", f.ode_rel, "ODE relative tolerance");
  cmd->add_option("--ode-abs-tol", f.ode_abs, "ODE absolute tolerance");
  cmd->add_option("--divergence-threshold", f.divergence, "energy cutoff");
  cmd->add_option("--max-steps", f.max_steps, "ODE steps per level");
  cmd->add_option("--quad-rel-tol", f.quad_rel, "quadrature relative tolerance");
  cmd->add_option("--max-subdivisions", f.max_subdiv, "quadrature panel budget");
}

RunConfig resolve(const Flags& f) {
  RunConfig cfg = f.config_path ? load_run_config(*f.config_path) : RunConfig{};

  if (f.system) {
    if (*f.system == "box")
      cfg.system = QuantumBox{};
    else if (*f.system == "harmonic")
      cfg.system = Harmonic{};
    else if (*f.system == "powerlaw")
      cfg.system = PowerLaw{};
    else
      throw ConfigError("unknown system \"" + *f.system + "\"");
  }
  std::visit(
      [&](auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, QuantumBox>) {
          if (f.a) s.a = *f.a;
          if (f.m) s.m = *f.m;
          if (f.omega0) throw ConfigError("--omega0 applies to the harmonic system");
          if (f.k || f.nu) throw ConfigError("--k/--nu apply to the powerlaw system");
        } else if constexpr (std::is_same_v<T, Harmonic>) {
          if (f.omega0) s.omega0 = *f.omega0;
          if (f.e0) s.ground_energy = *f.e0;
          if (f.a) throw ConfigError("--a applies to the box system");
          if (f.m) throw ConfigError("--m applies to the box or powerlaw system");
          if (f.k || f.nu) throw ConfigError("--k/--nu apply to the powerlaw system");
        } else {
          if (f.k) s.k = *f.k;
          if (f.nu) s.nu = *f.nu;
          if (f.m) s.m = *f.m;
          if (f.a) throw ConfigError("--a applies to the box system");
          if (f.omega0) throw ConfigError("--omega0 applies to the harmonic system");
        }
      },
      cfg.system);

  if (f.family) {
    if (*f.family == "linear")
      cfg.deformation.family = DeformationFamily::Linear;
    else if (*f.family == "exponential")
      cfg.deformation.family = DeformationFamily::Exponential;
    else
      throw ConfigError("unknown family \"" + *f.family + "\"");
  }
  if (f.s) cfg.deformation.s = *f.s;
  if (f.hbar) cfg.units.hbar = *f.hbar;
  if (f.kB) cfg.units.boltzmann = *f.kB;
  if (f.ode_rel) cfg.ode.rel_tol = *f.ode_rel;
  if (f.ode_abs) cfg.ode.abs_tol = *f.ode_abs;
  if (f.divergence) cfg.ode.divergence_threshold = *f.divergence;
  if (f.max_steps) cfg.ode.max_steps_per_level = *f.max_steps;
  if (f.quad_rel) cfg.quad.rel_tol = *f.quad_rel;
  if (f.max_subdiv) cfg.quad.max_subdivisions = *f.max_subdiv;
  if (f.format) {
    if (*f.format == "csv")
      cfg.output.format = OutputFormat::Csv;
    else if (*f.format == "json")
      cfg.output.format = OutputFormat::Json;
    else
      throw ConfigError("unknown format \"" + *f.format + "\"");
  }
  if (f.out) cfg.output.path = *f.out;

  validate_units(cfg.units);
  validate_system(cfg.system);
  return cfg;
}

double resolve_ground_energy(const RunConfig& cfg, const std::optional<double>& e0_flag) {
  if (e0_flag) return *e0_flag;
  return default_ground_energy(cfg.system, cfg.units);
}

// ---------------------------------------------------------------------------
// Closed-form spectrum availability.

enum class ClosedForm { Box, Oscillator };

ClosedForm closed_form_kind(const RunConfig& cfg) {
  if (cfg.deformation.family != DeformationFamily::Linear)
    throw DomainError("method", "no closed form for the exponential family");
  if (std::holds_alternative<PowerLaw>(cfg.system))
    throw DomainError("method", "no closed form for the power-law spectrum");
  if (std::holds_alternative<QuantumBox>(cfg.system)) {
    if (!(cfg.deformation.s > 0.0))
      throw DomainError("method", "box closed form requires s > 0");
    return ClosedForm::Box;
  }
  if (cfg.deformation.s == 0.0)
    throw DomainError("method", "oscillator closed form requires s != 0");
  return ClosedForm::Oscillator;
}

double eval_closed(const RunConfig& cfg, ClosedForm kind, int n) {
  if (kind == ClosedForm::Box)
    return box_spectrum_closed(n, cfg.deformation.s, std::get<QuantumBox>(cfg.system),
                               cfg.units);
  return oscillator_spectrum_closed(n, cfg.deformation, std::get<Harmonic>(cfg.system),
                                    cfg.units);
}

int cmd_spectrum(const RunConfig& cfg, int n_max, const std::string& method,
                 const std::optional<double>& e0_flag) {
  if (n_max < 0) throw DomainError("n-max", "must be >= 0");
  const bool want_ode = method == "ode" || method == "both";
  const bool want_closed = method == "closed" || method == "both";
  if (!want_ode && !want_closed)
    throw ConfigError("method must be ode, closed or both");

  Table t;
  t.metadata = base_metadata(cfg);
  t.metadata["command"] = "spectrum";

  std::optional<SpectrumResult> ode;
  if (want_ode) {
    const double e0 = resolve_ground_energy(cfg, e0_flag);
    ode = solve_spectrum_ode(cfg.system, cfg.deformation, e0, n_max, cfg.ode, cfg.units);
    t.metadata["cutoff"] = cutoff_json(ode->cutoff);
  }

  std::optional<ClosedForm> closed;
  if (want_closed) closed = closed_form_kind(cfg);

  if (const auto* box = std::get_if<QuantumBox>(&cfg.system);
      box && cfg.deformation.family == DeformationFamily::Linear &&
      cfg.deformation.s > 0.0) {
    const BoxCapacity cap = box_state_capacity(cfg.deformation.s, *box, cfg.units);
    t.metadata["box_capacity"] = cap.count;
    t.metadata["commensurate"] = cap.commensurate;
  }

  if (method == "ode") {
    t.columns = {"n", "E_ode"};
    for (const Level& l : ode->levels) t.rows.push_back({Cell(l.n), Cell(l.energy)});
  } else if (method == "closed") {
    t.columns = {"n", "E_closed"};
    for (int n = 0; n <= n_max; ++n) {
      try {
        const double e = eval_closed(cfg, *closed, n);
        t.rows.push_back({Cell(n), Cell(e)});
      } catch (const OutOfDomain& e) {
        t.metadata["cutoff"] = Json{{"type", "DivergenceDetected"}, {"n_star", e.n_star()}};
        break;
      }
    }
  } else {
    t.columns = {"n", "E_ode", "E_closed", "rel_diff"};
    for (const Level& l : ode->levels) {
      try {
        const double e = eval_closed(cfg, *closed, l.n);
        const double rel = std::abs(l.energy - e) / std::max(std::abs(e), 1e-300);
        t.rows.push_back({Cell(l.n), Cell(l.energy), Cell(e), Cell(rel)});
      } catch (const OutOfDomain&) {
        break;
      }
    }
  }
  emit(t, cfg);
  return 0;
}

int cmd_dos(const RunConfig& cfg, double emin, double emax, int count) {
  if (!(emin > 0.0) || !(emax > emin))
    throw DomainError("emin/emax", "need 0 < emin < emax");
  if (count < 2) throw DomainError("count", "need at least 2 grid points");
  if (cfg.deformation.family == DeformationFamily::Linear && cfg.deformation.s < 0.0 &&
      1.0 + cfg.deformation.s * emax <= 0.0)
    throw PreconditionError("(1+sE) <= 0 at the top of the energy grid; lower emax");

  const DosSpec dos = DosSpec::from_system(cfg.system, cfg.units);
  Table t;
  t.columns = {"E", "rho0", "rho"};
  t.metadata = base_metadata(cfg);
  t.metadata["command"] = "dos";
  for (int i = 0; i < count; ++i) {
    const double E = emin + (emax - emin) * i / (count - 1);
    t.rows.push_back(
        {Cell(E), Cell(dos.rho0(E)), Cell(deformed_dos(dos, cfg.deformation, E))});
  }
  emit(t, cfg);
  return 0;
}

UnperturbedEnergyLaw resolve_law(const RunConfig& cfg, const std::string& law, long N,
                                 double A) {
  if (law == "ideal") return IdealGasLaw{N};
  if (law == "phonon") return PhononLaw{A};
  if (law == "powerlaw-gas") {
    const auto* pl = std::get_if<PowerLaw>(&cfg.system);
    return PowerLawGasLaw{N, pl ? pl->nu : 2.0};
  }
  if (law != "system") throw ConfigError("unknown law \"" + law + "\"");
  return std::visit(
      [&](const auto& s) -> UnperturbedEnergyLaw {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, QuantumBox>)
          return IdealGasLaw{N};
        else if constexpr (std::is_same_v<T, Harmonic>)
          return PowerLawGasLaw{N, 2.0};
        else
          return PowerLawGasLaw{N, s.nu};
      },
      cfg.system);
}

ThermoPoint thermo_exact(const RunConfig& cfg, double T, long N) {
  const DosSpec dos = DosSpec::from_system(cfg.system, cfg.units);
  const double dn = static_cast<double>(N);
  ThermoPoint pt;
  pt.T = T;
  pt.route = ThermoRoute::ExactQuadrature;
  if (cfg.deformation.family == DeformationFamily::Linear) {
    pt.Z = partition_function(dos, cfg.deformation, T, cfg.quad).value;
    pt.U = dn * internal_energy_exact(dos, cfg.deformation, T, cfg.quad);
    pt.C = dn * heat_capacity_exact(dos, cfg.deformation, T, cfg.quad);
  } else {
    // With hbar -> hbar e^{sE} every thermodynamic quantity is the
    // undeformed one at the effective temperature 1/T* = 1/T + s.
    const double s = cfg.deformation.s;
    pt.Z = partition_exponential(dos, s, T, cfg.quad).value;
    const double theta = dos.theta(T);
    const double theta_star = dos.theta(effective_temperature(T, s, cfg.units));
    const double coeff = dos.exponent + 1.0;
    pt.U = dn * coeff * theta_star;
    pt.C = dn * cfg.units.boltzmann * coeff * (theta_star / theta) *
           (theta_star / theta);
  }
  return pt;
}

ThermoPoint thermo_first_order(const RunConfig& cfg, double T,
                               const UnperturbedEnergyLaw& law) {
  ThermoPoint pt;
  pt.T = T;
  pt.route = ThermoRoute::FirstOrder;
  pt.U = internal_energy_first_order(law, cfg.deformation.s, T, cfg.units);
  pt.C = heat_capacity_first_order(law, cfg.deformation.s, T, cfg.units);
  return pt;
}

int cmd_thermo(const RunConfig& cfg, const std::vector<double>& T_grid,
               const std::string& route, const std::string& law_name, long N, double A) {
  if (T_grid.empty()) throw DomainError("T", "at least one temperature required");
  const bool want_exact = route == "exact" || route == "both";
  const bool want_first = route == "first-order" || route == "both";
  if (!want_exact && !want_first)
    throw ConfigError("route must be exact, first-order or both");
  if (want_exact && law_name != "system")
    throw UnsupportedDomain("the exact route needs a density of states; only "
                            "--law system provides one (use first-order)");

  const UnperturbedEnergyLaw law = resolve_law(cfg, law_name, N, A);
  Table t;
  t.columns = {"T", "Z", "U", "C", "route"};
  t.metadata = base_metadata(cfg);
  t.metadata["command"] = "thermo";
  for (double T : T_grid) {
    if (want_exact) {
      const ThermoPoint p = thermo_exact(cfg, T, N);
      t.rows.push_back({Cell(p.T), p.Z ? Cell(*p.Z) : Cell(), Cell(p.U), Cell(p.C),
                        Cell(std::string("exact"))});
    }
    if (want_first) {
      const ThermoPoint p = thermo_first_order(cfg, T, law);
      t.rows.push_back({Cell(p.T), Cell(), Cell(p.U), Cell(p.C),
                        Cell(std::string("first-order"))});
    }
  }
  emit(t, cfg);
  return 0;
}

int cmd_sweep(const RunConfig& cfg, const std::string& axis, double start, double stop,
              int count, const std::string& observable, int n_level, double T_fixed,
              const std::string& route, const std::string& law_name, long N, double A,
              const std::optional<double>& e0_flag) {
  if (count < 2) throw DomainError("count", "sweep needs count >= 2");
  if (axis != "s" && axis != "T" && axis != "nu")
    throw ConfigError("axis must be s, T or nu");
  if (axis == "nu" && !std::holds_alternative<PowerLaw>(cfg.system))
    throw DomainError("axis", "nu sweeps need --system powerlaw");
  const bool first_order = route == "first-order";
  if (!first_order && route != "exact")
    throw ConfigError("sweep route must be exact or first-order");
  if (first_order && observable == "Z")
    throw DomainError("observable", "Z is only defined on the exact route");

  Table t;
  t.columns = {axis, observable, "error"};
  t.metadata = base_metadata(cfg);
  t.metadata["command"] = "sweep";

  int failures = 0;
  for (int i = 0; i < count; ++i) {
    const double v = start + (stop - start) * i / (count - 1);
    RunConfig local = cfg;
    double T = T_fixed;
    if (axis == "s")
      local.deformation.s = v;
    else if (axis == "T")
      T = v;
    else
      std::get<PowerLaw>(local.system).nu = v;

    try {
      double value = 0.0;
      if (observable == "En") {
        const double e0 = resolve_ground_energy(local, e0_flag);
        const SpectrumResult r = solve_spectrum_ode(local.system, local.deformation, e0,
                                                    n_level, local.ode, local.units);
        if (static_cast<int>(r.levels.size()) <= n_level)
          throw PreconditionError("level " + std::to_string(n_level) +
                                  " lies beyond the spectrum cutoff");
        value = r.levels[n_level].energy;
      } else if (observable == "Z") {
        value = *thermo_exact(local, T, N).Z;
      } else if (observable == "U" || observable == "C") {
        const ThermoPoint p =
            first_order ? thermo_first_order(local, T, resolve_law(local, law_name, N, A))
                        : thermo_exact(local, T, N);
        value = observable == "U" ? p.U : p.C;
      } else {
        throw ConfigError("observable must be Z, U, C or En");
      }
      t.rows.push_back({Cell(v), Cell(value), Cell()});
    } catch (const ConfigError&) {
      throw;  // configuration mistakes abort the whole sweep
    } catch (const Error& e) {
      ++failures;
      t.rows.push_back({Cell(v), Cell(), Cell(std::string(e.what()))});
    }
  }
  emit(t, cfg);
  return failures == count ? 3 : 0;
}

int cmd_selftest() {
  const std::vector<CheckResult> results = run_selftest();
  bool all = true;
  for (const CheckResult& r : results) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
    if (!r.detail.empty()) std::cout << " — " << r.detail;
    std::cout << "\n";
    all = all && r.pass;
  }
  std::cout << (all ? "selftest: all checks passed\n" : "selftest: FAILURES\n");
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semiclassical spectra and Boltzmann thermodynamics for systems with "
               "an energy-dependent Planck constant"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Flags flags;

  auto* sp = app.add_subcommand("spectrum", "energy levels E_n");
  add_common_flags(sp, flags);
  int n_max = 10;
  std::string method = "ode";
  sp->add_option("--n-max", n_max, "highest level index");
  sp->add_option("--method", method, "ode|closed|both");

  auto* dos = app.add_subcommand("dos", "density of states over an energy grid");
  add_common_flags(dos, flags);
  double emin = 0.1, emax = 10.0;
  int dos_count = 50;
  dos->add_option("--emin", emin, "grid start");
  dos->add_option("--emax", emax, "grid end");
  dos->add_option("--count", dos_count, "grid points");

  auto* th = app.add_subcommand("thermo", "Z, U, C at given temperatures");
  add_common_flags(th, flags);
  std::vector<double> T_grid;
  std::string route = "exact", law_name = "system";
  long N = 1;
  double A = 1.0;
  th->add_option("--T", T_grid, "temperatures (repeatable)")->required();
  th->add_option("--route", route, "exact|first-order|both");
  th->add_option("--law", law_name, "system|ideal|powerlaw-gas|phonon");
  th->add_option("--N", N, "particle count");
  th->add_option("--A", A, "phonon coefficient in U0 = A T^4");

  auto* sw = app.add_subcommand("sweep", "one observable along s, T or nu");
  add_common_flags(sw, flags);
  std::string axis = "s", observable = "U", sweep_route = "exact",
              sweep_law = "system";
  double start = 0.0, stop = 1.0, T_fixed = 1.0, sweep_A = 1.0;
  int sweep_count = 11, n_level = 0;
  long sweep_N = 1;
  sw->add_option("--axis", axis, "s|T|nu")->required();
  sw->add_option("--start", start, "axis start")->required();
  sw->add_option("--stop", stop, "axis stop")->required();
  sw->add_option("--count", sweep_count, "grid points");
  sw->add_option("--observable", observable, "Z|U|C|En");
  sw->add_option("--n", n_level, "level index for observable En");
  sw->add_option("--T", T_fixed, "temperature for s/nu sweeps");
  sw->add_option("--route", sweep_route, "exact|first-order");
  sw->add_option("--law", sweep_law, "system|ideal|powerlaw-gas|phonon");
  sw->add_option("--N", sweep_N, "particle count");
  sw->add_option("--A", sweep_A, "phonon coefficient");

  auto* st = app.add_subcommand("selftest", "run the cross-validation battery");
  (void)st;

  std::optional<double> e0_flag;

  try {
    app.parse(argc, argv);
    e0_flag = flags.e0;

    if (st->parsed()) return cmd_selftest();

    const RunConfig cfg = resolve(flags);
    if (sp->parsed()) return cmd_spectrum(cfg, n_max, method, e0_flag);
    if (dos->parsed()) return cmd_dos(cfg, emin, emax, dos_count);
    if (th->parsed()) return cmd_thermo(cfg, T_grid, route, law_name, N, A);
    if (sw->parsed())
      return cmd_sweep(cfg, axis, start, stop, sweep_count, observable, n_level, T_fixed,
                       sweep_route, sweep_law, sweep_N, sweep_A, e0_flag);
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 4;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
