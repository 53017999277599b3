#pragma once

#include <functional>
#include <vector>

#include "semicl/errors.hpp"

namespace semicl {

struct OdeConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_steps_per_level = 10000;
  double divergence_threshold = 1e12;  ///< energy-units ceiling
};

void validate(const OdeConfig& cfg);

enum class OdeStop {
  Completed,      ///< reached the last requested checkpoint
  Diverged,       ///< divergence predicate fired on an accepted step
  StepCollapse,   ///< step size shrank below 1e-12 in n
  PredicateHit,   ///< external stop predicate fired (fixed-point saturation)
};

struct OdeTrace {
  /// State at n = 0, 1, ..., emitted while integration is healthy.
  std::vector<double> checkpoints;
  OdeStop stop = OdeStop::Completed;
  double n_stop = 0.0;  ///< fractional n where integration stopped
};

/// Integrates the autonomous scalar ODE dy/dn = rhs(y) from y(0) = y0 with an
/// embedded Dormand-Prince 5(4) pair, landing exactly on every integer n up
/// to n_max. `diverged` and `stopped` are evaluated on accepted states; a
/// checkpoint that fires either predicate is not emitted.
OdeTrace integrate_checkpoints(const std::function<double(double)>& rhs, double y0,
                               int n_max, const OdeConfig& cfg,
                               const std::function<bool(double)>& diverged = {},
                               const std::function<bool(double)>& stopped = {});

}  // namespace semicl
