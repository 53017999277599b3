#include "semicl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

namespace semicl {

void validate(const QuadratureConfig& cfg) {
  if (!(cfg.rel_tol > 0.0 && cfg.rel_tol < 1e-2))
    throw ConfigError("quadrature rel_tol must be in (0, 1e-2)");
  if (cfg.max_subdivisions <= 0)
    throw ConfigError("quadrature max_subdivisions must be positive");
}

namespace {

// 15-point Kronrod nodes (positive half) and weights; embedded 7-point Gauss
// weights on the odd-indexed nodes. QUADPACK dqk15 values.
constexpr double kNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kKronrodW[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kGaussW[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a = 0.0, b = 0.0;
  double value = 0.0;
  double error = 0.0;
  double resabs = 0.0;
};

struct PanelOrder {
  bool operator()(const Panel& lhs, const Panel& rhs) const {
    return lhs.error < rhs.error;
  }
};

Panel gk15(const std::function<double(double)>& g, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  double fv[15];
  const double fc = g(center);
  double resk = kKronrodW[7] * fc;
  double resg = kGaussW[3] * fc;
  double resabs = kKronrodW[7] * std::abs(fc);
  fv[14] = fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    const double f1 = g(center - dx);
    const double f2 = g(center + dx);
    fv[2 * i] = f1;
    fv[2 * i + 1] = f2;
    resk += kKronrodW[i] * (f1 + f2);
    resabs += kKronrodW[i] * (std::abs(f1) + std::abs(f2));
    if (i % 2 == 1) resg += kGaussW[i / 2] * (f1 + f2);
  }
  if (!std::isfinite(resk))
    throw EvaluationError("integrand returned a non-finite value in [" +
                          std::to_string(a) + ", " + std::to_string(b) + "]");

  const double mean = 0.5 * resk;
  double resasc = kKronrodW[7] * std::abs(fc - mean);
  for (int i = 0; i < 7; ++i)
    resasc += kKronrodW[i] * (std::abs(fv[2 * i] - mean) + std::abs(fv[2 * i + 1] - mean));

  Panel p{a, b, resk * half, std::abs((resk - resg) * half), resabs * std::abs(half)};
  resasc *= std::abs(half);
  if (resasc != 0.0 && p.error != 0.0)
    p.error = resasc * std::min(1.0, std::pow(200.0 * p.error / resasc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double uflow = std::numeric_limits<double>::min();
  if (p.resabs > uflow / (50.0 * eps))
    p.error = std::max(eps * 50.0 * p.resabs, p.error);
  return p;
}

// Adaptive refinement over a set of seed intervals of a single mapped
// integrand. Splits the worst panel until the error sum meets the relative
// target or the subdivision budget runs out.
IntegralResult adapt(const std::function<double(double)>& g,
                     const std::vector<std::pair<double, double>>& seeds,
                     const QuadratureConfig& cfg) {
  std::priority_queue<Panel, std::vector<Panel>, PanelOrder> heap;
  double value = 0.0, error = 0.0, resabs = 0.0;
  for (const auto& [a, b] : seeds) {
    Panel p = gk15(g, a, b);
    value += p.value;
    error += p.error;
    resabs += p.resabs;
    heap.push(p);
  }

  int splits = 0;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  auto converged = [&] {
    const double target = cfg.rel_tol * std::abs(value);
    return error <= std::max(target, 50.0 * eps * resabs);
  };
  while (!converged() && splits < cfg.max_subdivisions) {
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Interval exhausted at machine resolution; keep its estimate.
      heap.push(worst);
      break;
    }
    Panel left = gk15(g, worst.a, mid);
    Panel right = gk15(g, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    resabs += left.resabs + right.resabs - worst.resabs;
    heap.push(left);
    heap.push(right);
    ++splits;
  }
  return {value, error, splits, converged()};
}

}  // namespace

IntegralResult integrate_semi_infinite(const std::function<double(double)>& f,
                                       double lower, std::optional<double> upper,
                                       const QuadratureConfig& cfg) {
  validate(cfg);
  if (!std::isfinite(lower) || lower < 0.0)
    throw DomainError("lower", "lower limit must be finite and >= 0");
  const double p = cfg.singularity_exponent.value_or(0.0);
  if (p <= -1.0)
    throw SingularityTooStrong("endpoint exponent p = " + std::to_string(p) +
                               " is not integrable");

  const double a = lower;
  const bool infinite = !upper.has_value();
  if (!infinite) {
    if (!(*upper > a)) throw DomainError("upper", "upper limit must exceed lower");
  }

  // Head region [a, a+d]: substitute x = a + u^m with m = 1/(1+p), which turns
  // (x-a)^p dx into m du and removes the algebraic endpoint singularity. Only
  // divergent endpoints (p < 0) benefit; bounded ones are integrated directly.
  // Tail region: identity map up to a finite limit, or t/(1-t) to infinity.
  const double span = infinite ? 1.0 : std::min(1.0, *upper - a);
  const double m = 1.0 / (1.0 + p);
  const bool substitute = p < 0.0;

  std::function<double(double)> g;
  std::vector<std::pair<double, double>> seeds;
  const double head_end = substitute ? std::pow(span, 1.0 / m) : span;
  const double tail_break = a + span;

  if (infinite) {
    // g integrates the head on [0, head_end] (mapped) and the tail on
    // (head_end, head_end + 1) via t in (0, 1) shifted by head_end.
    g = [f, a, m, substitute, head_end](double u) {
      if (u <= head_end) {
        if (!substitute) return f(a + u);
        const double um = std::pow(u, m);
        return f(a + um) * m * std::pow(u, m - 1.0);
      }
      const double t = u - head_end;
      const double x = a + 1.0 + t / (1.0 - t);
      const double jac = 1.0 / ((1.0 - t) * (1.0 - t));
      return f(x) * jac;
    };
    seeds = {{0.0, head_end}, {head_end, head_end + 1.0}};
  } else {
    const double b = *upper;
    g = [f, a, m, substitute, head_end](double u) {
      if (!substitute || u > head_end) return f(substitute ? u : a + u);
      const double um = std::pow(u, m);
      return f(a + um) * m * std::pow(u, m - 1.0);
    };
    if (substitute) {
      seeds = {{0.0, head_end}};
      if (b > tail_break) seeds.push_back({tail_break, b});
    } else {
      seeds = {{0.0, b - a}};
    }
  }
  return adapt(g, seeds, cfg);
}

double derivative(const std::function<double(double)>& f, double T, int order) {
  if (!(T > 0.0)) throw DomainError("T", "derivative stencil requires T > 0");
  if (order != 1 && order != 2)
    throw DomainError("order", "supported derivative orders are 1 and 2");
  const double h = T * 1e-4;

  auto eval = [&](double x) {
    const double v = f(x);
    if (!std::isfinite(v))
      throw EvaluationError("function not finite at T = " + std::to_string(x));
    return v;
  };

  if (order == 1) {
    const double d1 = (eval(T + h) - eval(T - h)) / (2.0 * h);
    const double d2 = (eval(T + 2.0 * h) - eval(T - 2.0 * h)) / (4.0 * h);
    return (4.0 * d1 - d2) / 3.0;
  }
  const double fc = eval(T);
  const double s1 = (eval(T + h) - 2.0 * fc + eval(T - h)) / (h * h);
  const double s2 = (eval(T + 2.0 * h) - 2.0 * fc + eval(T - 2.0 * h)) / (4.0 * h * h);
  return (4.0 * s1 - s2) / 3.0;
}

}  // namespace semicl
