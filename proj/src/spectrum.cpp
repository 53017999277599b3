#include "semicl/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace semicl {

FixedPointInfo fixed_point(const Deformation& d) {
  if (d.family != DeformationFamily::Linear)
    throw UnsupportedDeformation("e^{sE} > 0 everywhere: no finite fixed point");
  if (d.s == 0.0) return {};
  return {true, -1.0 / d.s, d.s < 0.0 ? Stability::Stable : Stability::Unstable};
}

double box_gamma(const QuantumBox& spec, const UnitsConvention& units) {
  return std::numbers::pi * units.hbar / (std::sqrt(2.0 * spec.m) * spec.a);
}

double default_ground_energy(const SystemSpec& spec, const UnitsConvention& units) {
  return std::visit(
      [&](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, QuantumBox>) {
          return 0.0;
        } else if constexpr (std::is_same_v<T, Harmonic>) {
          return s.ground_energy.value_or(0.5 * units.hbar * s.omega0);
        } else {
          // Undeformed level at n = 1/2: E = [q * hbar * alpha * 1/2]^{1/q},
          // q = 1/2 + 1/nu.
          const double q = 0.5 + 1.0 / s.nu;
          const double alpha = alpha_coefficient(s.k, s.nu, s.m, units);
          return std::pow(0.5 * q * units.hbar * alpha, 1.0 / q);
        }
      },
      spec);
}

SpectrumResult solve_spectrum_ode(const SystemSpec& spec, const Deformation& d,
                                  double E0, int n_max, const OdeConfig& cfg,
                                  const UnitsConvention& units) {
  validate_system(spec);
  validate_units(units);
  validate(cfg);
  if (!(E0 >= 0.0) || !std::isfinite(E0))
    throw PreconditionError("E0 must be finite and >= 0");
  const bool linear = d.family == DeformationFamily::Linear;
  if (linear && 1.0 + d.s * E0 < 0.0)
    throw PreconditionError("(1 + s*E0) < 0: initial level outside the admissible range");

  const FrequencyLaw law = frequency_law(spec, units);
  const double beta = law.exponent;
  if (beta < 0.0 && E0 == 0.0)
    throw PreconditionError(
        "omega_cl diverges at E = 0 for nu < 2; start from E0 > 0");

  const double s = d.s;
  // Deformation factor, clamped at the fixed point so Runge-Kutta stage
  // points may graze E_f without tripping the strict precondition.
  auto defo = [linear, s](double E) {
    return linear ? std::max(1.0 + s * E, 0.0) : std::exp(s * E);
  };

  const double hc = units.hbar * law.prefactor;
  std::function<double(double)> rhs;
  std::function<double(double)> to_energy;
  double y0 = E0;
  if (beta > 0.0) {
    // Integrate y = E^{1-beta}: the E^beta factor cancels and the right side
    // stays Lipschitz through E = 0 (the box ground level starts there).
    const double q = 1.0 - beta;
    to_energy = [q](double y) { return y <= 0.0 ? 0.0 : std::pow(y, 1.0 / q); };
    rhs = [=](double y) { return q * hc * defo(to_energy(y)); };
    y0 = E0 == 0.0 ? 0.0 : std::pow(E0, q);
  } else {
    to_energy = [](double y) { return y; };
    if (beta == 0.0)
      rhs = [=](double E) { return hc * defo(E); };
    else
      rhs = [=](double E) { return hc * defo(E) * std::pow(E, beta); };
  }

  auto diverged = [&](double y) { return to_energy(y) > cfg.divergence_threshold; };
  std::function<bool(double)> saturated;
  if (linear && s < 0.0) {
    const double E_f = -1.0 / s;
    saturated = [=](double y) { return std::abs(to_energy(y) - E_f) < cfg.abs_tol; };
  }

  const OdeTrace trace = integrate_checkpoints(rhs, y0, n_max, cfg, diverged, saturated);

  SpectrumResult result;
  result.method = SpectrumMethod::OdeIntegration;
  result.levels.reserve(trace.checkpoints.size());
  for (std::size_t i = 0; i < trace.checkpoints.size(); ++i)
    result.levels.push_back({static_cast<int>(i), to_energy(trace.checkpoints[i])});
  switch (trace.stop) {
    case OdeStop::Completed:
      result.cutoff = LevelCapReached{};
      break;
    case OdeStop::Diverged:
    case OdeStop::StepCollapse:
      result.cutoff = DivergenceDetected{trace.n_stop};
      break;
    case OdeStop::PredicateHit:
      result.cutoff = FixedPointSaturated{-1.0 / s};
      break;
  }
  return result;
}

double box_spectrum_closed(int n, double s, const QuantumBox& spec,
                           const UnitsConvention& units) {
  validate_system(SystemSpec{spec});
  if (!(s > 0.0)) throw DomainError("s", "box closed form requires s > 0");
  if (n < 0) throw DomainError("n", "level index must be >= 0");
  const double g = box_gamma(spec, units);
  const double arg = g * n * std::sqrt(s);
  if (arg >= std::numbers::pi / 2.0) {
    const double n_star = std::numbers::pi / (2.0 * g * std::sqrt(s));
    throw OutOfDomain("level " + std::to_string(n) + " lies past the divergence at n = " +
                          std::to_string(n_star),
                      n_star);
  }
  const double t = std::tan(arg);
  return t * t / s;
}

double oscillator_spectrum_closed(int n, const Deformation& d, const Harmonic& spec,
                                  const UnitsConvention& units) {
  validate_system(SystemSpec{spec});
  if (d.family != DeformationFamily::Linear)
    throw UnsupportedDeformation("no closed-form oscillator spectrum for the exponential family");
  if (d.s == 0.0) throw DomainError("s", "oscillator closed form requires s != 0");
  if (n < 0) throw DomainError("n", "level index must be >= 0");
  const double E0 = spec.ground_energy.value_or(0.5 * units.hbar * spec.omega0);
  if (1.0 + d.s * E0 < 0.0)
    throw PreconditionError("(1 + s*E0) < 0: ground level outside the admissible range");
  const double x = d.s * units.hbar * spec.omega0 * n;
  // (E0 + 1/s) e^x - 1/s  ==  E0 e^x + expm1(x)/s, stable for small s.
  return E0 * std::exp(x) + std::expm1(x) / d.s;
}

double undeformed_spectrum_closed(const SystemSpec& spec, int n, double E0,
                                  const UnitsConvention& units) {
  validate_system(spec);
  if (n < 0) throw DomainError("n", "level index must be >= 0");
  return std::visit(
      [&](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, QuantumBox>) {
          const double g = box_gamma(s, units);
          const double u = std::sqrt(E0) + g * n;  // d sqrt(E) / dn = gamma
          return u * u;
        } else if constexpr (std::is_same_v<T, Harmonic>) {
          return E0 + n * units.hbar * s.omega0;
        } else {
          const double q = 0.5 + 1.0 / s.nu;
          const double alpha = alpha_coefficient(s.k, s.nu, s.m, units);
          return std::pow(std::pow(E0, q) + q * units.hbar * alpha * n, 1.0 / q);
        }
      },
      spec);
}

BoxCapacity box_state_capacity(double s, const QuantumBox& spec,
                               const UnitsConvention& units) {
  validate_system(SystemSpec{spec});
  if (!(s > 0.0)) throw DomainError("s", "state capacity is defined for s > 0 only");
  const double n_star = std::numbers::pi / (2.0 * box_gamma(spec, units) * std::sqrt(s));
  // Snap near-integer poles so commensurate cases are classified robustly.
  const double snapped = std::round(n_star);
  const bool commensurate = std::abs(n_star - snapped) <= 1e-9 * std::max(1.0, n_star);
  const double effective = commensurate ? snapped : n_star;
  return {static_cast<long>(std::ceil(effective)) - 1, commensurate};
}

}  // namespace semicl
