#include "semicl/statmech.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "semicl/classical.hpp"
#include "semicl/gamma.hpp"

namespace semicl {

namespace {

void require_temperature(double T) {
  if (!(T > 0.0) || !std::isfinite(T)) throw DomainError("T", "temperature must be > 0");
}

void require_positive_energy(double E) {
  if (!(E > 0.0)) throw DomainError("E", "energy must be > 0");
}

double strict_factor(const Deformation& d, double energy) {
  if (d.family == DeformationFamily::Linear) {
    const double f = 1.0 + d.s * energy;
    if (f <= 0.0)
      throw PreconditionError("(1+sE) <= 0 at E = " + std::to_string(energy));
    return f;
  }
  return std::exp(d.s * energy);
}

// Per-particle unperturbed energy for a power-law DOS: U0 = (p+1) * theta.
double dos_u0(const DosSpec& dos, double theta) {
  return (dos.exponent + 1.0) * theta;
}

}  // namespace

DosSpec DosSpec::from_system(const SystemSpec& spec, const UnitsConvention& units) {
  validate_units(units);
  const FrequencyLaw law = frequency_law(spec, units);
  return DosSpec{1.0 / (units.hbar * law.prefactor), -law.exponent, units};
}

DosSpec DosSpec::power_law(double prefactor, double exponent,
                           const UnitsConvention& units) {
  validate_units(units);
  if (!(prefactor > 0.0)) throw DomainError("prefactor", "must be strictly positive");
  if (!(exponent > -1.0))
    throw DomainError("exponent", "DOS exponent must exceed -1 for integrability");
  return DosSpec{prefactor, exponent, units};
}

double DosSpec::rho0(double energy) const {
  require_positive_energy(energy);
  return exponent == 0.0 ? prefactor : prefactor * std::pow(energy, exponent);
}

double microstate_count(const DosSpec& dos, const Deformation& d, double energy,
                        double dE) {
  if (!(dE > 0.0)) throw DomainError("dE", "energy window must be > 0");
  return dos.rho0(energy) * dE / strict_factor(d, energy);
}

double deformed_dos(const DosSpec& dos, const Deformation& d, double energy) {
  return dos.rho0(energy) / strict_factor(d, energy);
}

IntegralResult partition_function(const DosSpec& dos, const Deformation& d, double T,
                                  const QuadratureConfig& cfg) {
  validate(cfg);
  require_temperature(T);
  const double theta = dos.theta(T);
  const double s = d.s;
  const double p = dos.exponent;

  if (d.family == DeformationFamily::Linear && s < 0.0)
    throw UnsupportedDomain(
        "exact route undefined for s<0; use first-order (integrand has a pole at "
        "E = -1/s)");
  if (d.family == DeformationFamily::Exponential && 1.0 / theta + s <= 0.0)
    throw DomainError("s", "1/T + s must be > 0 for the exponential family");

  // Work in u = E/theta so the integrand is O(1)-scaled; the closed s = 0
  // result is then prefactor * theta^{p+1} * Gamma(p+1).
  std::function<double(double)> integrand;
  if (d.family == DeformationFamily::Linear) {
    integrand = [=](double u) {
      const double pw = u == 0.0 ? (p == 0.0 ? 1.0 : 0.0) : std::pow(u, p);
      return std::exp(-u) * pw / (1.0 + s * theta * u);
    };
  } else {
    integrand = [=](double u) {
      const double pw = u == 0.0 ? (p == 0.0 ? 1.0 : 0.0) : std::pow(u, p);
      return std::exp(-u * (1.0 + s * theta)) * pw;
    };
  }

  QuadratureConfig local = cfg;
  local.singularity_exponent = p;
  IntegralResult r = integrate_semi_infinite(integrand, 0.0, std::nullopt, local);
  const double scale = dos.prefactor * std::pow(theta, p + 1.0);
  r.value *= scale;
  r.est_abs_error *= scale;
  return r;
}

double partition_undeformed_closed(const DosSpec& dos, double T) {
  require_temperature(T);
  const double theta = dos.theta(T);
  return dos.prefactor * std::pow(theta, dos.exponent + 1.0) *
         gamma_value(dos.exponent + 1.0);
}

double internal_energy_exact(const DosSpec& dos, const Deformation& d, double T,
                             const QuadratureConfig& cfg) {
  if (d.family != DeformationFamily::Linear)
    throw UnsupportedDeformation("exact ratio route applies to the linear family");
  if (d.s < 0.0)
    throw UnsupportedDomain("exact route undefined for s<0; use first-order");
  require_temperature(T);
  const double theta = dos.theta(T);

  // (Z0/Z - 1)/s is 0/0 as s -> 0; below the crossover both routes agree to
  // O(s^2) and the first-order expression is the numerically stable one.
  if (std::abs(d.s) * dos_u0(dos, theta) <= 1e-6) {
    const double u0 = dos_u0(dos, theta);
    return u0 - d.s * theta * theta * (dos.exponent + 1.0);
  }
  const IntegralResult z = partition_function(dos, d, T, cfg);
  if (!z.tolerance_met)
    throw ToleranceNotMet("partition quadrature did not converge for U");
  const double z0 = partition_undeformed_closed(dos, T);
  return (z0 / z.value - 1.0) / d.s;
}

double internal_energy_log_derivative(const DosSpec& dos, const Deformation& d,
                                      double T, const QuadratureConfig& cfg) {
  require_temperature(T);
  const double kB = dos.units.boltzmann;
  const double theta = dos.theta(T);
  auto logz = [&](double th) {
    const IntegralResult z = partition_function(dos, d, th / kB, cfg);
    if (!(z.value > 0.0)) throw EvaluationError("nonpositive partition function");
    return std::log(z.value);
  };
  return theta * theta * derivative(logz, theta, 1);
}

double unperturbed_energy(const UnperturbedEnergyLaw& law, double theta) {
  return std::visit(
      [&](const auto& l) -> double {
        using L = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<L, IdealGasLaw>) {
          return 0.5 * static_cast<double>(l.N) * theta;
        } else if constexpr (std::is_same_v<L, PowerLawGasLaw>) {
          return (1.0 / l.nu + 0.5) * static_cast<double>(l.N) * theta;
        } else if constexpr (std::is_same_v<L, PhononLaw>) {
          return l.A * theta * theta * theta * theta;
        } else {
          if (!l.U0) throw EvaluationError("tabulated law has no U0 callable");
          return l.U0(theta);
        }
      },
      law);
}

double internal_energy_first_order(const UnperturbedEnergyLaw& law, double s, double T,
                                   const UnitsConvention& units) {
  require_temperature(T);
  const double theta = units.boltzmann * T;
  return std::visit(
      [&](const auto& l) -> double {
        using L = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<L, IdealGasLaw>) {
          return 0.5 * static_cast<double>(l.N) * theta * (1.0 - s * theta);
        } else if constexpr (std::is_same_v<L, PowerLawGasLaw>) {
          return (1.0 / l.nu + 0.5) * static_cast<double>(l.N) * theta *
                 (1.0 - s * theta);
        } else if constexpr (std::is_same_v<L, PhononLaw>) {
          const double t4 = theta * theta * theta * theta;
          return l.A * t4 * (1.0 - 4.0 * s * theta);
        } else {
          auto u0 = [&](double th) { return unperturbed_energy(law, th); };
          return u0(theta) - s * theta * theta * derivative(u0, theta, 1);
        }
      },
      law);
}

double heat_capacity_first_order(const UnperturbedEnergyLaw& law, double s, double T,
                                 const UnitsConvention& units) {
  require_temperature(T);
  const double kB = units.boltzmann;
  const double theta = kB * T;
  return std::visit(
      [&](const auto& l) -> double {
        using L = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<L, IdealGasLaw>) {
          return kB * 0.5 * static_cast<double>(l.N) * (1.0 - 2.0 * s * theta);
        } else if constexpr (std::is_same_v<L, PowerLawGasLaw>) {
          return kB * (1.0 / l.nu + 0.5) * static_cast<double>(l.N) *
                 (1.0 - 2.0 * s * theta);
        } else if constexpr (std::is_same_v<L, PhononLaw>) {
          // d/dtheta of A theta^4 (1 - 4 s theta) = A (4 theta^3 - 20 s theta^4)
          const double t3 = theta * theta * theta;
          return kB * l.A * (4.0 * t3 - 20.0 * s * t3 * theta);
        } else {
          auto u0 = [&](double th) { return unperturbed_energy(law, th); };
          const double d1 = derivative(u0, theta, 1);
          const double d2 = derivative(u0, theta, 2);
          return kB * (d1 - s * (2.0 * theta * d1 + theta * theta * d2));
        }
      },
      law);
}

double heat_capacity_exact(const DosSpec& dos, const Deformation& d, double T,
                           const QuadratureConfig& cfg) {
  require_temperature(T);
  const double kB = dos.units.boltzmann;
  auto u = [&](double th) { return internal_energy_exact(dos, d, th / kB, cfg); };
  return kB * derivative(u, dos.theta(T), 1);
}

double effective_temperature(double T, double s, const UnitsConvention& units) {
  require_temperature(T);
  const double theta = units.boltzmann * T;
  const double inv = 1.0 / theta + s;
  if (!(inv > 0.0))
    throw DomainError("s", "1/T + s must be > 0 for an effective temperature");
  return 1.0 / inv / units.boltzmann;
}

IntegralResult partition_exponential(const DosSpec& dos, double s, double T,
                                     const QuadratureConfig& cfg) {
  const double T_star = effective_temperature(T, s, dos.units);
  const IntegralResult direct =
      partition_function(dos, exponential_deformation(s), T, cfg);
  const double via_identity = partition_undeformed_closed(dos, T_star);
  if (std::abs(direct.value - via_identity) > 1e-6 * std::abs(via_identity))
    throw ToleranceNotMet("direct quadrature disagrees with Z0(T*) beyond 1e-6");
  return direct;
}

LevelSumResult partition_from_levels(const SpectrumResult& levels, double T,
                                     const UnitsConvention& units) {
  require_temperature(T);
  if (levels.levels.empty()) throw DomainError("levels", "spectrum holds no levels");
  const double theta = units.boltzmann * T;

  double sum = 0.0;
  for (const Level& l : levels.levels) sum += std::exp(-l.energy / theta);

  double tail = 0.0;
  if (std::holds_alternative<LevelCapReached>(levels.cutoff)) {
    // Geometric continuation from the last gap; unknown for a single level.
    const std::size_t k = levels.levels.size();
    if (k >= 2) {
      const double last = levels.levels[k - 1].energy;
      const double gap = last - levels.levels[k - 2].energy;
      if (gap > 0.0) {
        const double r = std::exp(-gap / theta);
        tail = std::exp(-last / theta) * r / (1.0 - r);
      } else {
        tail = std::numeric_limits<double>::infinity();
      }
    } else {
      tail = std::numeric_limits<double>::infinity();
    }
  } else if (std::holds_alternative<FixedPointSaturated>(levels.cutoff)) {
    // Infinitely many levels accumulate at E_f: the discrete sum diverges.
    tail = std::numeric_limits<double>::infinity();
  }
  // DivergenceDetected: levels beyond the cutoff have unbounded energy and
  // contribute nothing.

  return {sum, tail, tail <= 1e-6 * sum};
}

}  // namespace semicl
