#include "semicl/selftest.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>

#include "semicl/classical.hpp"
#include "semicl/core.hpp"
#include "semicl/oracles.hpp"
#include "semicl/spectrum.hpp"
#include "semicl/statmech.hpp"

namespace semicl {

namespace {

constexpr double kPi = std::numbers::pi;

// Deterministic uniform draws independent of the stdlib distribution
// implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  double uniform(double lo, double hi) {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    const double x = static_cast<double>(state_ >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * x;
  }

private:
  std::uint64_t state_;
};

struct Tracker {
  double worst = 0.0;
  void feed(double dev) { worst = std::max(worst, dev); }
  bool below(double tol) const { return worst < tol; }
};

std::string describe(const Tracker& t, double tol) {
  std::ostringstream os;
  os << "worst deviation " << t.worst << " (tolerance " << tol << ")";
  return os.str();
}

double rel_diff(double got, double want) {
  const double scale = std::max(std::abs(want), 1e-300);
  return std::abs(got - want) / scale;
}

CheckResult check_box_closed_vs_ode() {
  const QuantumBox box{1.0, 1.0};
  const UnitsConvention units{};
  const double g = box_gamma(box, units);
  OdeConfig cfg;
  cfg.rel_tol = 1e-11;
  cfg.abs_tol = 1e-14;

  Tracker t;
  bool complete = true;
  for (double s : {1e-4, 1e-3, 1e-2}) {
    const int n_top = static_cast<int>(1.4 / (g * std::sqrt(s)));
    const SpectrumResult ode =
        solve_spectrum_ode(SystemSpec{box}, linear_deformation(s), 0.0, n_top, cfg, units);
    if (static_cast<int>(ode.levels.size()) < n_top + 1) complete = false;
    for (int n = 1; n <= n_top && n < static_cast<int>(ode.levels.size()); ++n)
      t.feed(rel_diff(ode.levels[n].energy, box_spectrum_closed(n, s, box, units)));
  }
  const bool pass = complete && t.below(1e-8);
  return {"box closed form vs ODE", pass, describe(t, 1e-8)};
}

CheckResult check_oscillator_closed_vs_ode() {
  const Harmonic osc{1.0, 0.5};
  const UnitsConvention units{};
  OdeConfig cfg;
  cfg.rel_tol = 1e-12;
  cfg.abs_tol = 1e-15;

  Tracker t;
  for (double s : {0.2, -0.2, 0.05, -0.05}) {
    const SpectrumResult ode =
        solve_spectrum_ode(SystemSpec{osc}, linear_deformation(s), 0.5, 100, cfg, units);
    if (ode.levels.size() != 101)
      return {"oscillator closed form vs ODE", false,
              "ODE stopped early at s = " + std::to_string(s)};
    for (int n = 0; n <= 100; ++n) {
      const double want = oscillator_spectrum_closed(n, linear_deformation(s), osc, units);
      t.feed(std::abs(ode.levels[n].energy - want) / std::max(std::abs(want), cfg.abs_tol));
    }
  }
  // Fixed-point convergence: for s = -1/2 the sequence must reach
  // E_f = 2 to within 1e-10 by n = 60.
  const SpectrumResult sat =
      solve_spectrum_ode(SystemSpec{osc}, linear_deformation(-0.5), 0.5, 60, cfg, units);
  const bool reached = sat.levels.size() == 61 &&
                       std::abs(sat.levels[60].energy - 2.0) < 1e-10;
  const bool pass = t.below(1e-8) && reached;
  std::string detail = describe(t, 1e-8);
  if (!reached) detail += "; fixed point not reached by n=60";
  return {"oscillator closed form vs ODE", pass, detail};
}

CheckResult check_s_zero_reductions() {
  const UnitsConvention units{};
  OdeConfig cfg;
  cfg.rel_tol = 1e-11;
  cfg.abs_tol = 1e-14;
  const Deformation none = linear_deformation(0.0);
  Tracker t;

  const QuantumBox box{1.0, 1.0};
  const SpectrumResult box_ode =
      solve_spectrum_ode(SystemSpec{box}, none, 0.0, 30, cfg, units);
  const double g = box_gamma(box, units);
  for (int n = 1; n <= 30; ++n)
    t.feed(rel_diff(box_ode.levels[n].energy, g * g * n * n));

  const Harmonic osc{1.0, 0.5};
  const SpectrumResult osc_ode =
      solve_spectrum_ode(SystemSpec{osc}, none, 0.5, 100, cfg, units);
  for (int n = 0; n <= 100; ++n)
    t.feed(rel_diff(osc_ode.levels[n].energy, 0.5 + n));

  for (const PowerLaw pl : {PowerLaw{1.0, 0.8, 1.0}, PowerLaw{1.3, 1.5, 1.0},
                            PowerLaw{0.7, 3.0, 1.0}, PowerLaw{2.0, 5.0, 1.0}}) {
    const double e0 = default_ground_energy(SystemSpec{pl}, units);
    const SpectrumResult ode = solve_spectrum_ode(SystemSpec{pl}, none, e0, 20, cfg, units);
    for (int n = 0; n <= 20; ++n)
      t.feed(rel_diff(ode.levels[n].energy,
                      undeformed_spectrum_closed(SystemSpec{pl}, n, e0, units)));
  }

  // nu = 2 with k = omega0^2/2 must reproduce the oscillator level-by-level.
  const double omega0 = 1.3;
  const Harmonic osc2{omega0, std::nullopt};
  const PowerLaw pl2{0.5 * omega0 * omega0, 2.0, 1.0};
  const double e0 = default_ground_energy(SystemSpec{osc2}, units);
  const SpectrumResult a = solve_spectrum_ode(SystemSpec{osc2}, none, e0, 50, cfg, units);
  const SpectrumResult b = solve_spectrum_ode(SystemSpec{pl2}, none, e0, 50, cfg, units);
  for (int n = 0; n <= 50; ++n)
    t.feed(rel_diff(b.levels[n].energy, a.levels[n].energy));

  return {"s=0 reductions", t.below(1e-8), describe(t, 1e-8)};
}

CheckResult check_small_s_box_limit() {
  const QuantumBox box{1.0, 1.0};
  const UnitsConvention units{};
  const double g = box_gamma(box, units);
  const double s = 1e-8;
  Tracker t;
  for (int n = 1; n <= 10; ++n) {
    const double undeformed = g * g * n * n;
    t.feed(std::abs(box_spectrum_closed(n, s, box, units) - undeformed) / undeformed);
  }
  return {"small-s limit of the box closed form", t.below(1e-3), describe(t, 1e-3)};
}

CheckResult check_partition_gamma_closed_form() {
  const UnitsConvention units{};
  QuadratureConfig cfg;
  Tracker t;
  for (double nu : {1.0, 2.0, 3.0, 10.0}) {
    const DosSpec dos = DosSpec::from_system(SystemSpec{PowerLaw{1.0, nu, 1.0}}, units);
    for (double T : {0.5, 1.0, 5.0}) {
      const IntegralResult z = partition_function(dos, linear_deformation(0.0), T, cfg);
      t.feed(rel_diff(z.value, partition_undeformed_closed(dos, T)));
    }
  }
  return {"undeformed partition function vs Gamma closed form", t.below(1e-8),
          describe(t, 1e-8)};
}

CheckResult check_perturbative_order() {
  const UnitsConvention units{};
  const DosSpec dos = DosSpec::from_system(SystemSpec{Harmonic{1.0}}, units);
  const UnperturbedEnergyLaw law = PowerLawGasLaw{1, 2.0};
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-12;
  const double T = 1.0;

  auto delta = [&](double s) {
    const double exact = internal_energy_exact(dos, linear_deformation(s), T, cfg);
    return std::abs(exact - internal_energy_first_order(law, s, T, units));
  };
  bool pass = true;
  std::ostringstream os;
  os << "ratios";
  for (double s : {0.2, 0.1, 0.05}) {
    const double r = delta(s) / delta(0.5 * s);
    os << " " << r;
    if (!(r >= 3.2 && r <= 4.8)) pass = false;
  }
  os << " (expected within [3.2, 4.8])";
  return {"first-order remainder scales as s^2", pass, os.str()};
}

CheckResult check_route_identity() {
  const UnitsConvention units{};
  const DosSpec dos = DosSpec::from_system(SystemSpec{Harmonic{1.0}}, units);
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-12;
  Tracker t;
  for (double s : {0.05, 0.1}) {
    for (double T : {0.5, 1.0, 2.0}) {
      const Deformation d = linear_deformation(s);
      const double via_ratio = internal_energy_exact(dos, d, T, cfg);
      const double via_logz = internal_energy_log_derivative(dos, d, T, cfg);
      t.feed(rel_diff(via_logz, via_ratio));
    }
  }
  return {"ratio route equals T^2 dlnZ/dT", t.below(1e-6), describe(t, 1e-6)};
}

CheckResult check_named_closed_forms() {
  const UnitsConvention units{};
  Tracker t;
  for (double s : {0.0, 0.07, -0.3}) {
    for (double T : {0.4, 1.0, 2.5}) {
      const UnperturbedEnergyLaw ideal = IdealGasLaw{3};
      t.feed(rel_diff(internal_energy_first_order(ideal, s, T, units),
                      0.5 * 3 * T * (1.0 - s * T)));
      t.feed(rel_diff(heat_capacity_first_order(ideal, s, T, units),
                      0.5 * 3 * (1.0 - 2.0 * s * T)));

      for (double nu : {1.0, 2.0, 3.7}) {
        const UnperturbedEnergyLaw gas = PowerLawGasLaw{2, nu};
        const double coeff = (1.0 / nu + 0.5) * 2;
        t.feed(rel_diff(internal_energy_first_order(gas, s, T, units),
                        coeff * T * (1.0 - s * T)));
        t.feed(rel_diff(heat_capacity_first_order(gas, s, T, units),
                        coeff * (1.0 - 2.0 * s * T)));
      }

      const UnperturbedEnergyLaw phonon = PhononLaw{1.3};
      const double T4 = T * T * T * T;
      t.feed(rel_diff(internal_energy_first_order(phonon, s, T, units),
                      1.3 * T4 * (1.0 - 4.0 * s * T)));
      t.feed(rel_diff(heat_capacity_first_order(phonon, s, T, units),
                      1.3 * (4.0 * T * T * T - 20.0 * s * T4)));

      // nu = 2 heat capacity is exactly the oscillator-gas form N(1-2sT).
      const long N = 5;
      t.feed(rel_diff(heat_capacity_first_order(PowerLawGasLaw{N, 2.0}, s, T, units),
                      N * (1.0 - 2.0 * s * T)));
    }
  }
  return {"named first-order closed forms", t.below(1e-12), describe(t, 1e-12)};
}

CheckResult check_exponential_effective_temperature() {
  const UnitsConvention units{};
  const DosSpec flat = DosSpec::from_system(SystemSpec{Harmonic{1.0}}, units);
  const DosSpec power = DosSpec::from_system(SystemSpec{PowerLaw{1.0, 3.0, 1.0}}, units);
  QuadratureConfig cfg;
  Rng rng(20240811);
  Tracker t;
  for (int i = 0; i < 20; ++i) {
    const double T = std::exp(rng.uniform(std::log(0.3), std::log(5.0)));
    // Keep 1/T + s comfortably positive so the integral decays.
    const double s = rng.uniform(-0.8 / T, 2.0);
    if (1.0 / T + s < 0.05) continue;
    const double T_star = effective_temperature(T, s, units);
    for (const DosSpec& dos : {flat, power}) {
      const IntegralResult z = partition_exponential(dos, s, T, cfg);
      t.feed(rel_diff(z.value, partition_undeformed_closed(dos, T_star)));
    }
  }
  return {"exponential family reduces to Z0(T*)", t.below(1e-8), describe(t, 1e-8)};
}

CheckResult check_discrete_continuum() {
  const UnitsConvention units{};
  const Harmonic osc{1.0, 0.5};
  OdeConfig ode_cfg;
  const SpectrumResult levels = solve_spectrum_ode(SystemSpec{osc}, linear_deformation(0.0),
                                                   0.5, 300, ode_cfg, units);
  const LevelSumResult sum = partition_from_levels(levels, 10.0, units);
  const DosSpec dos = DosSpec::from_system(SystemSpec{osc}, units);
  const IntegralResult z = partition_function(dos, linear_deformation(0.0), 10.0, {});
  const double gap = rel_diff(sum.value, z.value);
  std::ostringstream os;
  os << "relative gap " << gap << " (tolerance 0.01, expected about 4e-4)";
  return {"discrete level sum vs continuum partition function", gap < 0.01, os.str()};
}

CheckResult check_classical_period_oracle() {
  const UnitsConvention units{};
  Rng rng(987654321);
  Tracker t;
  for (int i = 0; i < 20; ++i) {
    const double k = rng.uniform(0.3, 3.0);
    const double nu = rng.uniform(0.6, 6.0);
    const double E = rng.uniform(0.5, 5.0);
    const double omega = alpha_coefficient(k, nu, 1.0, units) *
                         std::pow(E, 0.5 - 1.0 / nu);
    const double period = power_law_period(k, nu, 1.0, E);
    t.feed(rel_diff(2.0 * kPi / period, omega));
  }
  return {"frequency law vs turning-point period quadrature", t.below(1e-6),
          describe(t, 1e-6)};
}

}  // namespace

std::vector<CheckResult> run_selftest() {
  return {
      check_box_closed_vs_ode(),
      check_oscillator_closed_vs_ode(),
      check_s_zero_reductions(),
      check_small_s_box_limit(),
      check_partition_gamma_closed_form(),
      check_perturbative_order(),
      check_route_identity(),
      check_named_closed_forms(),
      check_exponential_effective_temperature(),
      check_discrete_continuum(),
      check_classical_period_oracle(),
  };
}

}  // namespace semicl
