#include "harmshear/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

namespace harmshear {

namespace {

// Stirling-series coefficients B_2k / (2k (2k-1)), k = 1..8.
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,       -1.0 / 360.0,          1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0,     -691.0 / 360360.0,     1.0 / 156.0,  -3617.0 / 122400.0};

constexpr double kStirlingShift = 15.0;

bool is_nonpositive_integer(Complex c) {
  return c.imag() == 0.0 && c.real() <= 0.0 && c.real() == std::round(c.real());
}

void require_valid_c(Complex c, const char* who) {
  if (is_nonpositive_integer(c)) {
    throw ParamError(std::string(who) + ": c must not be zero or a negative integer");
  }
}

Complex log_gamma_stirling(Complex z) {
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex series{0.0, 0.0};
  Complex power = inv;
  for (double coeff : kStirling) {
    series += coeff * power;
    power *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + series;
}

// Bound on sup_{j >= k} (|a| + j)(|b| + j) / (|c + j| (j + 1)); valid for k > |c|.
double ratio_majorant(double abs_a, double abs_b, double abs_c, double k) {
  return std::max(1.0, (k + abs_a) / (k + 1.0)) * (k + abs_b) / (k - abs_c);
}

// Gamma(g)/(Gamma(al) Gamma(g-al)) int_0^1 t^(al-1) (1-t)^(g-al-1) (1-xt)^(-b1) (1-yt)^(-b2) dt.
//
// The interval is split at 1/2. Near t = 0 the substitution t = s^(1/p),
// p = Re al, absorbs t^(al-1) dt into (1/p) s^(i Im al / p) ds; the mirror
// substitution 1 - t = r^(1/q), q = Re(g - al), handles t = 1. Each
// substitution is applied only when its exponent is singular (p or q < 1);
// complex exponents are integrated on a logarithmic scale.
Complex euler_beta_integral(Complex al, Complex g, Complex x, Complex b1, Complex y, Complex b2,
                            const QuadratureConfig& cfg) {
  const Complex gma = g - al;
  const double p = al.real();
  const double q = gma.real();
  if (!(p > 0.0) || !(q > 0.0)) {
    throw ParamError("Euler integral requires Re c > Re a > 0");
  }

  const bool x_active = b1 != Complex{0.0, 0.0} && x != Complex{0.0, 0.0};
  const bool y_active = b2 != Complex{0.0, 0.0} && y != Complex{0.0, 0.0};

  auto smooth_factors = [&](double t) {
    Complex v{1.0, 0.0};
    if (x_active) {
      v *= std::exp(-b1 * std::log(1.0 - x * t));
    }
    if (y_active) {
      v *= std::exp(-b2 * std::log(1.0 - y * t));
    }
    return v;
  };

  const Complex al_m1 = al - 1.0;
  const Complex gma_m1 = gma - 1.0;

  // int_0^(1/2) w^(e-1) rest(w) dw for Re e = k < 1, with w = s^(1/k). The
  // Jacobian leaves s^(i Im e / k), which oscillates without bound in log s;
  // when present, integrate in v = -log s instead, where it is smooth and
  // decays like e^(-v).
  auto singular_end = [&](Complex e, const std::function<Complex(double)>& rest) {
    const double k = e.real();
    const double upper = std::pow(0.5, k);
    const double omega = e.imag() / k;
    if (omega == 0.0) {
      return integrate_interval([&](double s) { return rest(std::pow(s, 1.0 / k)) / k; }, 0.0,
                                upper, cfg);
    }
    const double v0 = -std::log(upper);
    return integrate_interval(
        [&](double v) {
          const double s = std::exp(-v);
          return std::exp(Complex{-v, -omega * v}) / k * rest(std::pow(s, 1.0 / k));
        },
        v0, v0 + 40.0, cfg);
  };

  Complex left{0.0, 0.0};
  if (p < 1.0) {
    left = singular_end(al, [&](double t) { return std::exp(gma_m1 * std::log1p(-t)) * smooth_factors(t); });
  } else {
    left = integrate_interval(
        [&](double t) {
          return std::exp(al_m1 * std::log(t)) * std::exp(gma_m1 * std::log1p(-t)) *
                 smooth_factors(t);
        },
        0.0, 0.5, cfg);
  }

  Complex right{0.0, 0.0};
  if (q < 1.0) {
    right = singular_end(gma, [&](double u) { return std::exp(al_m1 * std::log1p(-u)) * smooth_factors(1.0 - u); });
  } else {
    right = integrate_interval(
        [&](double u) {
          const double t = 1.0 - u;
          return std::exp(al_m1 * std::log1p(-u)) * std::exp(gma_m1 * std::log(u)) *
                 smooth_factors(t);
        },
        0.0, 0.5, cfg);
  }

  const Complex norm = std::exp(log_gamma(g) - log_gamma(al) - log_gamma(gma));
  const Complex result = norm * (left + right);
  if (!is_finite(result)) {
    detail::throw_non_finite("Euler integral");
  }
  return result;
}

}  // namespace

Complex log_gamma(Complex z) {
  if (is_nonpositive_integer(z)) {
    throw PoleError("log_gamma: pole at nonpositive integer " + std::to_string(z.real()));
  }
  if (z.real() < 0.5) {
    // Gamma(z) Gamma(1 - z) = pi / sin(pi z)
    return std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma(1.0 - z);
  }
  Complex shift_log{0.0, 0.0};
  Complex w = z;
  while (w.real() < kStirlingShift) {
    shift_log += std::log(w);
    w += 1.0;
  }
  return log_gamma_stirling(w) - shift_log;
}

Complex gamma_fn(Complex z) { return std::exp(log_gamma(z)); }

Complex gauss_2f1_series(const Gauss2F1Params& p, Complex z, const SpecfunConfig& cfg) {
  require_valid_c(p.c, "gauss_2f1");
  const double r = std::abs(z);
  if (!(r < 1.0)) {
    throw DomainError("gauss_2f1_series: requires |z| < 1");
  }
  Complex sum{1.0, 0.0};
  Complex term{1.0, 0.0};
  if (r == 0.0) {
    return sum;
  }
  const double abs_a = std::abs(p.a);
  const double abs_b = std::abs(p.b);
  const double abs_c = std::abs(p.c);

  for (int k = 0; k < cfg.max_terms; ++k) {
    const double kd = static_cast<double>(k);
    term *= (p.a + kd) * (p.b + kd) / ((p.c + kd) * (kd + 1.0)) * z;
    sum += term;
    // sum now holds t_0..t_K with K = k + 1.
    const double big_k = kd + 1.0;
    if (big_k > abs_c) {
      const double rho = ratio_majorant(abs_a, abs_b, abs_c, big_k) * r;
      if (rho < 1.0) {
        const double tail = std::abs(term) * rho / (1.0 - rho);
        if (tail <= cfg.series_tol * std::abs(sum)) {
          return sum;
        }
      }
    }
  }
  throw NonConvergenceError("gauss_2f1_series: |z| too close to 1 for the term budget");
}

Complex gauss_2f1_euler(const Gauss2F1Params& p, Complex z, const SpecfunConfig& cfg) {
  require_valid_c(p.c, "gauss_2f1");
  if (!(std::abs(z) < 1.0)) {
    throw DomainError("gauss_2f1_euler: requires |z| < 1");
  }
  // 2F1(a, b; c; z) = Gamma(c)/(Gamma(b)Gamma(c-b)) int t^(b-1) (1-t)^(c-b-1) (1-zt)^(-a) dt
  auto admissible = [&](Complex lower) {
    return p.c.real() > lower.real() && lower.real() > 0.0;
  };
  if (admissible(p.b)) {
    return euler_beta_integral(p.b, p.c, z, p.a, Complex{}, Complex{}, cfg.quadrature);
  }
  if (admissible(p.a)) {
    return euler_beta_integral(p.a, p.c, z, p.b, Complex{}, Complex{}, cfg.quadrature);
  }
  throw ParamError("gauss_2f1_euler: requires Re c > Re b > 0 (or Re c > Re a > 0)");
}

Complex gauss_2f1(const Gauss2F1Params& p, Complex z, const SpecfunConfig& cfg) {
  require_valid_c(p.c, "gauss_2f1");
  const bool euler_ok = (p.c.real() > p.b.real() && p.b.real() > 0.0) ||
                        (p.c.real() > p.a.real() && p.a.real() > 0.0);
  if (std::abs(z) > cfg.series_radius && euler_ok) {
    return gauss_2f1_euler(p, z, cfg);
  }
  return gauss_2f1_series(p, z, cfg);
}

Complex appell_f1_series(const AppellF1Params& p, Complex x, Complex y, const SpecfunConfig& cfg) {
  require_valid_c(p.c, "appell_f1");
  const double r = std::max(std::abs(x), std::abs(y));
  if (!(r < 1.0)) {
    throw DomainError("appell_f1_series: requires max(|x|, |y|) < 1");
  }
  if (r == 0.0) {
    return {1.0, 0.0};
  }

  // Degree-N part: (a)_N/(c)_N * sum_{k+l=N} u_k v_l with
  // u_k = (b1)_k x^k / k!, v_l = (b2)_l y^l / l!.
  std::vector<Complex> u{Complex{1.0, 0.0}};
  std::vector<Complex> v{Complex{1.0, 0.0}};
  Complex outer{1.0, 0.0};  // (a)_N / (c)_N
  Complex sum{1.0, 0.0};

  // Majorant M_N = (|a|)_N (beta)_N r^N / (|(c)_N| N!), beta = |b1| + |b2|.
  const double abs_a = std::abs(p.a);
  const double abs_c = std::abs(p.c);
  const double beta = std::abs(p.b1) + std::abs(p.b2);
  double majorant = 1.0;

  for (int n = 1; n <= cfg.max_terms; ++n) {
    const double prev = static_cast<double>(n - 1);
    u.push_back(u.back() * (p.b1 + prev) / static_cast<double>(n) * x);
    v.push_back(v.back() * (p.b2 + prev) / static_cast<double>(n) * y);
    outer *= (p.a + prev) / (p.c + prev);
    majorant *= (abs_a + prev) * (beta + prev) * r / (std::abs(p.c + prev) * static_cast<double>(n));

    Complex inner{0.0, 0.0};
    for (int k = 0; k <= n; ++k) {
      inner += u[static_cast<std::size_t>(k)] * v[static_cast<std::size_t>(n - k)];
    }
    sum += outer * inner;

    const double nd = static_cast<double>(n);
    if (majorant == 0.0) {
      return sum;
    }
    if (nd > abs_c) {
      const double rho = ratio_majorant(abs_a, beta, abs_c, nd) * r;
      if (rho < 1.0) {
        const double tail = majorant * rho / (1.0 - rho);
        if (tail <= cfg.series_tol * std::abs(sum)) {
          return sum;
        }
      }
    }
  }
  throw NonConvergenceError("appell_f1_series: arguments too close to the unit bidisk boundary");
}

Complex appell_f1_euler(const AppellF1Params& p, Complex x, Complex y, const QuadratureConfig& cfg) {
  require_valid_c(p.c, "appell_f1");
  if (!(std::abs(x) < 1.0) || !(std::abs(y) < 1.0)) {
    throw DomainError("appell_f1_euler: requires |x| < 1 and |y| < 1");
  }
  return euler_beta_integral(p.a, p.c, x, p.b1, y, p.b2, cfg);
}

Complex appell_f1(const AppellF1Params& p, Complex x, Complex y, const SpecfunConfig& cfg) {
  require_valid_c(p.c, "appell_f1");
  const double r = std::max(std::abs(x), std::abs(y));
  const bool euler_ok = p.c.real() > p.a.real() && p.a.real() > 0.0;
  if (r > cfg.series_radius && euler_ok) {
    return appell_f1_euler(p, x, y, cfg.quadrature);
  }
  return appell_f1_series(p, x, y, cfg);
}

}  // namespace harmshear
