#include "harmshear/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <queue>
#include <vector>

namespace harmshear {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// 21-point Kronrod abscissae on [-1, 1] (nonnegative half, descending) with
// the embedded 10-point Gauss rule on the odd-indexed nodes.
constexpr std::array<double, 11> kKronrodNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208292139234, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr std::size_t kMaxPanels = 20000;

struct Panel {
  double a;
  double b;
  Complex value;
  double error;     // max(|K - G|, roundoff)
  double roundoff;  // floor below which bisection cannot help
  int depth;

  bool refinable() const { return error > roundoff; }
};

struct PanelOrder {
  bool operator()(const Panel& lhs, const Panel& rhs) const { return lhs.error < rhs.error; }
};

Complex eval_checked(const IntervalIntegrand& f, double t) {
  const Complex v = f(t);
  if (!is_finite(v)) {
    detail::throw_non_finite("integrand at t=" + std::to_string(t));
  }
  return v;
}

Panel gauss_kronrod(const IntervalIntegrand& f, double a, double b, int depth) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const Complex fc = eval_checked(f, center);
  Complex kronrod = fc * kKronrodWeights[10];
  Complex gauss{0.0, 0.0};
  double abs_sum = std::abs(fc) * kKronrodWeights[10];

  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * kKronrodNodes[j];
    const Complex f1 = eval_checked(f, center - dx);
    const Complex f2 = eval_checked(f, center + dx);
    kronrod += kKronrodWeights[j] * (f1 + f2);
    abs_sum += kKronrodWeights[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) {
      gauss += kGaussWeights[j / 2] * (f1 + f2);
    }
  }

  Panel p;
  p.a = a;
  p.b = b;
  p.depth = depth;
  p.value = kronrod * half;
  p.roundoff = 50.0 * kEps * abs_sum * std::abs(half);
  p.error = std::max(std::abs((kronrod - gauss) * half), p.roundoff);
  return p;
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || max_depth < 1) {
    throw ParamError("QuadratureConfig requires rel_tol > 0, abs_tol > 0, max_depth >= 1");
  }
}

Complex pochhammer(Complex alpha, unsigned n) {
  Complex result{1.0, 0.0};
  for (unsigned k = 0; k < n; ++k) {
    result *= alpha + static_cast<double>(k);
    if (!is_finite(result)) {
      detail::throw_non_finite("pochhammer overflow at n=" + std::to_string(n));
    }
  }
  return result;
}

Complex principal_log(Complex z) {
  if (z == Complex{0.0, 0.0}) {
    throw DomainError("principal_log: argument is zero");
  }
  Complex w = std::log(z);
  // std::log returns -i*pi on the cut when Im z == -0.0.
  if (w.imag() == -kPi) {
    w.imag(kPi);
  }
  return w;
}

Complex principal_pow(Complex z, Complex p) {
  if (z == Complex{0.0, 0.0}) {
    if (p.real() > 0.0) {
      return {0.0, 0.0};
    }
    if (p == Complex{0.0, 0.0}) {
      return {1.0, 0.0};
    }
    throw DomainError("principal_pow: 0 raised to a power with Re p <= 0");
  }
  return std::exp(p * principal_log(z));
}

Complex integrate_interval(const IntervalIntegrand& integrand, double a, double b,
                           const QuadratureConfig& cfg) {
  cfg.validate();
  if (a == b) {
    return {0.0, 0.0};
  }

  std::priority_queue<Panel, std::vector<Panel>, PanelOrder> refinable;
  std::vector<Panel> settled;
  std::size_t panel_count = 1;

  Complex total{0.0, 0.0};
  double total_error = 0.0;

  auto admit = [&](const Panel& p) {
    total += p.value;
    total_error += p.error;
    if (p.refinable()) {
      refinable.push(p);
    } else {
      settled.push_back(p);
    }
  };

  admit(gauss_kronrod(integrand, a, b, 0));

  while (true) {
    const double target = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
    if (total_error <= target || refinable.empty()) {
      break;
    }
    const Panel worst = refinable.top();
    if (worst.depth >= cfg.max_depth || panel_count >= kMaxPanels) {
      char msg[128];
      std::snprintf(msg, sizeof msg, "adaptive quadrature: error %.3g above tolerance %.3g",
                    total_error, target);
      throw NonConvergenceError(msg);
    }
    refinable.pop();
    total -= worst.value;
    total_error -= worst.error;

    const double mid = 0.5 * (worst.a + worst.b);
    admit(gauss_kronrod(integrand, worst.a, mid, worst.depth + 1));
    admit(gauss_kronrod(integrand, mid, worst.b, worst.depth + 1));
    ++panel_count;
  }

  // Re-sum from scratch; the running total accumulates cancellation drift.
  Complex sum{0.0, 0.0};
  for (const auto& p : settled) {
    sum += p.value;
  }
  while (!refinable.empty()) {
    sum += refinable.top().value;
    refinable.pop();
  }
  return sum;
}

Complex integrate_segment(const SegmentIntegrand& integrand, Complex from, Complex to,
                          const QuadratureConfig& cfg) {
  const Complex delta = to - from;
  if (delta == Complex{0.0, 0.0}) {
    cfg.validate();
    return {0.0, 0.0};
  }
  const Complex value = integrate_interval(
      [&](double s) { return integrand(from + s * delta); }, 0.0, 1.0, cfg);
  return value * delta;
}

Complex integrate_unit_interval(const IntervalIntegrand& integrand, const QuadratureConfig& cfg) {
  cfg.validate();

  constexpr double kHalfPi = 0.5 * kPi;
  constexpr double kUMax = 6.5;
  constexpr int kMaxLevel = 10;
  constexpr double kInteriorGuard = 1e-8;

  auto node_value = [&](double u) -> Complex {
    const double v = kHalfPi * std::sinh(u);
    const double e = std::exp(-2.0 * std::abs(v));
    const double near = e / (1.0 + e);  // distance to the nearer endpoint
    const double t = u >= 0.0 ? 1.0 / (1.0 + e) : near;
    const double weight = kHalfPi * std::cosh(u) * 2.0 * e / ((1.0 + e) * (1.0 + e));
    if (t <= 0.0 || t >= 1.0 || weight == 0.0) {
      return {0.0, 0.0};
    }
    const Complex fv = integrand(t);
    if (!is_finite(fv)) {
      if (near >= kInteriorGuard) {
        detail::throw_non_finite("unit-interval integrand at t=" + std::to_string(t));
      }
      return {0.0, 0.0};
    }
    return fv * weight;
  };

  // Sum over the nodes u = +-(offset + k*step) inside [-kUMax, kUMax].
  auto node_sum = [&](double step, double offset) {
    Complex sum{0.0, 0.0};
    for (double u = offset; u <= kUMax; u += step) {
      if (u == 0.0) {
        sum += node_value(0.0);
      } else {
        sum += node_value(u) + node_value(-u);
      }
    }
    return sum;
  };

  double step = 1.0;
  Complex sum = node_sum(step, 0.0);
  Complex estimate = sum * step;
  for (int level = 1; level <= kMaxLevel; ++level) {
    sum += node_sum(step, 0.5 * step);
    step *= 0.5;
    const Complex refined = sum * step;
    const double diff = std::abs(refined - estimate);
    estimate = refined;
    if (level >= 3 && diff <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(refined))) {
      return estimate;
    }
  }
  throw NonConvergenceError("tanh-sinh quadrature did not converge");
}

}  // namespace harmshear
