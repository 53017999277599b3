#include "semicl/ode.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace semicl {

void validate(const OdeConfig& cfg) {
  if (!(cfg.rel_tol > 0.0 && cfg.rel_tol < 1.0))
    throw ConfigError("ode rel_tol must be in (0,1)");
  if (!(cfg.abs_tol > 0.0 && cfg.abs_tol < 1.0))
    throw ConfigError("ode abs_tol must be in (0,1)");
  if (cfg.max_steps_per_level <= 0)
    throw ConfigError("ode max_steps_per_level must be positive");
  if (!(cfg.divergence_threshold > 0.0))
    throw ConfigError("ode divergence_threshold must be positive");
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// Difference between the 5th- and 4th-order weights (error estimator).
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

constexpr double kMinStep = 1e-12;

}  // namespace

OdeTrace integrate_checkpoints(const std::function<double(double)>& rhs, double y0,
                               int n_max, const OdeConfig& cfg,
                               const std::function<bool(double)>& diverged,
                               const std::function<bool(double)>& stopped) {
  validate(cfg);
  if (n_max < 0) throw ConfigError("n_max must be nonnegative");

  OdeTrace trace;
  double y = y0;
  double n = 0.0;

  auto blown = [&](double v) { return diverged && diverged(v); };
  auto halted = [&](double v) { return stopped && stopped(v); };

  if (blown(y)) {
    trace.stop = OdeStop::Diverged;
    return trace;
  }
  trace.checkpoints.push_back(y);
  if (halted(y)) {
    trace.stop = OdeStop::PredicateHit;
    return trace;
  }

  double h = 1e-3;
  double k1 = rhs(y);  // FSAL

  for (int level = 1; level <= n_max; ++level) {
    const double n_target = static_cast<double>(level);
    int steps = 0;
    while (n < n_target) {
      if (++steps > cfg.max_steps_per_level)
        throw EvaluationError("ODE step budget exhausted near n = " + std::to_string(n));
      const double ht = std::min(h, n_target - n);
      const bool clipped = ht < h;

      const double k2 = rhs(y + ht * (a21 * k1));
      const double k3 = rhs(y + ht * (a31 * k1 + a32 * k2));
      const double k4 = rhs(y + ht * (a41 * k1 + a42 * k2 + a43 * k3));
      const double k5 = rhs(y + ht * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
      const double k6 = rhs(y + ht * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
      const double y_new = y + ht * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);

      if (!std::isfinite(y_new)) {
        trace.stop = OdeStop::Diverged;
        trace.n_stop = n + ht;
        return trace;
      }
      const double k7 = rhs(y_new);
      const double err = ht * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
      const double scale =
          cfg.abs_tol + cfg.rel_tol * std::max(std::abs(y), std::abs(y_new));
      const double err_norm = std::abs(err) / scale;

      if (std::isfinite(err_norm) && err_norm <= 1.0) {
        if (blown(y_new)) {
          trace.stop = OdeStop::Diverged;
          trace.n_stop = n + ht;
          return trace;
        }
        n = clipped ? n_target : n + ht;
        y = y_new;
        k1 = k7;
        if (halted(y)) {
          trace.stop = OdeStop::PredicateHit;
          trace.n_stop = n;
          return trace;
        }
        const double fac = err_norm > 0.0
                               ? std::clamp(0.9 * std::pow(err_norm, -0.2), 0.2, 5.0)
                               : 5.0;
        // A clipped step says nothing about the natural step size; keep the
        // larger of the nominal h and the controller's proposal.
        h = clipped ? std::max(h, ht * fac) : ht * fac;
      } else {
        const double fac = std::isfinite(err_norm)
                               ? std::clamp(0.9 * std::pow(err_norm, -0.2), 0.2, 0.9)
                               : 0.2;
        h = ht * fac;
        if (h < kMinStep) {
          trace.stop = OdeStop::StepCollapse;
          trace.n_stop = n;
          return trace;
        }
      }
    }
    trace.checkpoints.push_back(y);
  }
  return trace;
}

}  // namespace semicl
