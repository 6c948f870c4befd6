#include "harmshear/maps.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace harmshear {

namespace {

constexpr double kCZeroTol = 1e-12;

void require_in_disk(Complex z, const char* who) {
  if (!(std::abs(z) < 1.0)) {
    throw DomainError(std::string(who) + ": requires |z| < 1");
  }
}

}  // namespace

SlitMapParams::SlitMapParams(double A, double B, double c, double gamma, SlitKind kind)
    : A_(A), B_(B), c_(c), gamma_(gamma), kind_(kind) {
  if (!(A > 0.0) || !(B > 0.0)) {
    throw ParamError("slit map requires A > 0 and B > 0");
  }
}

SlitMapParams SlitMapParams::from_gamma(double A, double B, double gamma) {
  if (!(gamma > 0.0) || !(gamma < kPi)) {
    throw ParamError("slit map requires gamma in (0, pi)");
  }
  return SlitMapParams(A, B, -2.0 * std::cos(gamma), gamma, SlitKind::Generic);
}

SlitMapParams SlitMapParams::from_c(double A, double B, double c) {
  if (c == -2.0) {
    return SlitMapParams(A, B, c, 0.0, SlitKind::DegenerateMinus2);
  }
  if (c == 2.0) {
    return SlitMapParams(A, B, c, kPi, SlitKind::DegeneratePlus2);
  }
  if (!(c > -2.0) || !(c < 2.0)) {
    throw ParamError("slit map requires c in [-2, 2]");
  }
  return SlitMapParams(A, B, c, std::acos(-0.5 * c), SlitKind::Generic);
}

SlitMapParams SlitMapParams::from_rational_gamma(double A, double B, long num, long den) {
  if (den <= 0 || num <= 0 || 2 * num >= den) {
    throw ParamError("rational gamma requires 0 < num/den < 1/2");
  }
  const long g = std::gcd(num, den);
  num /= g;
  den /= g;
  const double gamma = 2.0 * kPi * static_cast<double>(num) / static_cast<double>(den);
  SlitMapParams p(A, B, -2.0 * std::cos(gamma), gamma, SlitKind::Generic);
  if (4 * num == den) {
    p.c_ = 0.0;
  }
  p.fraction_ = std::make_pair(num, den);
  return p;
}

double SlitMapParams::gamma() const {
  if (degenerate()) {
    throw UnsupportedError("degenerate slit map (c = +-2) has no gamma in (0, pi)");
  }
  return gamma_;
}

Complex SlitMapParams::eta() const {
  if (fraction_) {
    return root_of_unity(static_cast<int>(fraction_->first), static_cast<int>(fraction_->second));
  }
  return std::polar(1.0, gamma());
}

NGonParams::NGonParams(int n) : n_(n) {
  if (n < 3) {
    throw ParamError("regular n-gon map requires n >= 3");
  }
}

Complex ConformalMapSpec::phi(Complex z, const QuadratureConfig& cfg) const {
  if (is_slit()) {
    return slit_phi(slit(), z);
  }
  return ngon_phi(ngon(), z, cfg);
}

Complex ConformalMapSpec::phi_prime(Complex z) const {
  if (is_slit()) {
    return slit_phi_prime(slit(), z);
  }
  return ngon_phi_prime(ngon(), z);
}

Complex ipow(Complex z, int k) {
  Complex result{1.0, 0.0};
  Complex base = z;
  while (k > 0) {
    if (k & 1) {
      result *= base;
    }
    base *= base;
    k >>= 1;
  }
  return result;
}

Complex root_of_unity(int k, int n) {
  if (n < 1) {
    throw ParamError("root_of_unity requires n >= 1");
  }
  k %= n;
  if (k < 0) {
    k += n;
  }
  if (2 * k > n) {
    return std::conj(root_of_unity(n - k, n));
  }
  if (k == 0) {
    return {1.0, 0.0};
  }
  if (2 * k == n) {
    return {-1.0, 0.0};
  }
  if (4 * k == n) {
    return {0.0, 1.0};
  }
  const double angle = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

std::vector<Complex> roots_of_unity(int n) {
  if (n < 1) {
    throw ParamError("roots_of_unity requires n >= 1");
  }
  std::vector<Complex> roots;
  roots.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    roots.push_back(root_of_unity(k, n));
  }
  return roots;
}

Complex partial_fraction_inv_one_minus_zn(int n, Complex z) {
  Complex sum{0.0, 0.0};
  for (const Complex zk : roots_of_unity(n)) {
    const Complex d = z - zk;
    if (std::abs(d) <= 1e-14) {
      throw PoleError("partial fraction of 1/(1 - z^n): z is an n-th root of unity");
    }
    sum += zk / d;
  }
  return -sum / static_cast<double>(n);
}

Complex slit_phi(const SlitMapParams& p, Complex z) {
  require_in_disk(z, "slit_phi");
  const Complex log_term = p.A() * principal_log((1.0 + z) / (1.0 - z));
  Complex denom;
  switch (p.kind()) {
    case SlitKind::DegenerateMinus2:
      denom = (1.0 - z) * (1.0 - z);
      break;
    case SlitKind::DegeneratePlus2:
      denom = (1.0 + z) * (1.0 + z);
      break;
    case SlitKind::Generic:
      denom = 1.0 + p.c() * z + z * z;
      break;
  }
  return log_term + p.B() * z / denom;
}

Complex slit_phi_prime(const SlitMapParams& p, Complex z) {
  require_in_disk(z, "slit_phi_prime");
  const Complex log_part = 2.0 * p.A() / (1.0 - z * z);
  switch (p.kind()) {
    case SlitKind::DegenerateMinus2:
      return log_part + p.B() * (1.0 + z) / ipow(1.0 - z, 3);
    case SlitKind::DegeneratePlus2:
      return log_part + p.B() * (1.0 - z) / ipow(1.0 + z, 3);
    case SlitKind::Generic:
      break;
  }
  const Complex eta = p.eta();
  const Complex eta_bar = std::conj(eta);
  const Complex d1 = 1.0 - eta * z;
  const Complex d2 = 1.0 - eta_bar * z;
  const Complex bracket = eta / (d1 * d1) - eta_bar / (d2 * d2);
  return log_part - p.B() / (2.0 * std::sin(p.gamma())) * kI * bracket;
}

std::vector<HalfLine> slit_omitted_halflines(const SlitMapParams& p) {
  const double A = p.A();
  const double B = p.B();
  const double im = A * kPi / 2.0;
  using Dir = HalfLine::Direction;

  if (p.degenerate()) {
    const double x = (A / 2.0) * std::log(2.0 * A / B) - (2.0 * A + B) / 4.0;
    if (p.kind() == SlitKind::DegenerateMinus2) {
      return {{{x, im}, Dir::NegativeReal}, {{x, -im}, Dir::NegativeReal}};
    }
    return {{{-x, im}, Dir::PositiveReal}, {{-x, -im}, Dir::PositiveReal}};
  }
  if (std::abs(p.c()) > kCZeroTol) {
    throw UnsupportedError("omitted half-lines are only known for c in {-2, 0, 2}");
  }
  // The boundary arc e^(i theta), theta in (0, pi/2), maps to
  // A log cot(theta/2) + B / (2 cos theta) + i A pi / 2, minimized at tan^2 theta = 2A/B.
  const double s = std::sqrt(2.0 * A + B);
  const double rb = std::sqrt(B);
  const double x = (A / 2.0) * std::log((s + rb) / (s - rb)) + std::sqrt(B * (2.0 * A + B)) / 2.0;
  return {{{x, im}, Dir::PositiveReal},
          {{x, -im}, Dir::PositiveReal},
          {{-x, im}, Dir::NegativeReal},
          {{-x, -im}, Dir::NegativeReal}};
}

std::vector<SlitEndpointTrace> trace_slit_endpoints(const SlitMapParams& p, double r) {
  if (!(r > 0.0) || !(r < 1.0)) {
    throw DomainError("trace_slit_endpoints: requires 0 < r < 1");
  }
  const auto lines = slit_omitted_halflines(p);
  const double A = p.A();
  const double B = p.B();

  // Boundary angle of the endpoint in the upper half-plane, for the slit
  // that extends in the direction of increasing (c = 0, c = +2) or
  // decreasing (c = -2) real part.
  double upper_theta = 0.0;
  if (p.kind() == SlitKind::DegenerateMinus2) {
    upper_theta = 2.0 * std::atan(std::sqrt(B / (2.0 * A)));
  } else if (p.kind() == SlitKind::DegeneratePlus2) {
    upper_theta = kPi - 2.0 * std::atan(std::sqrt(B / (2.0 * A)));
  } else {
    upper_theta = std::atan(std::sqrt(2.0 * A / B));
  }

  std::vector<SlitEndpointTrace> traces;
  for (const auto& line : lines) {
    double theta = upper_theta;
    if (!p.degenerate() && line.direction == HalfLine::Direction::NegativeReal) {
      theta = kPi - upper_theta;
    }
    if (line.anchor.imag() < 0.0) {
      theta = -theta;
    }
    traces.push_back({line, theta, slit_phi(p, std::polar(r, theta))});
  }
  return traces;
}

double ngon_series_coefficient(int n, int k) {
  if (n < 1 || k < 0) {
    throw IndexError("ngon_series_coefficient requires n >= 1, k >= 0");
  }
  const double alpha = 2.0 / static_cast<double>(n);
  double c = 1.0;
  for (int j = 0; j < k; ++j) {
    c *= (alpha + j) / (j + 1.0);
  }
  return c / (static_cast<double>(n) * k + 1.0);
}

Complex ngon_phi_prime(const NGonParams& p, Complex z) {
  require_in_disk(z, "ngon_phi_prime");
  const double n = static_cast<double>(p.n());
  return std::exp((-2.0 / n) * std::log(1.0 - ipow(z, p.n())));
}

Complex ngon_phi(const NGonParams& p, Complex z, const QuadratureConfig& cfg) {
  require_in_disk(z, "ngon_phi");
  return integrate_segment([&](Complex zeta) { return ngon_phi_prime(p, zeta); }, Complex{}, z, cfg);
}

Complex ngon_phi_series(const NGonParams& p, Complex z) {
  require_in_disk(z, "ngon_phi_series");
  const int n = p.n();
  const double alpha = 2.0 / n;
  const Complex zn = ipow(z, n);
  const double rn = std::abs(zn);

  Complex power = z;  // z^(n k + 1)
  double coeff = 1.0;  // (2/n)_k / k!
  Complex sum{0.0, 0.0};
  constexpr int kMaxTerms = 2000000;
  for (int k = 0; k < kMaxTerms; ++k) {
    sum += coeff * power / (static_cast<double>(n) * k + 1.0);
    // The coefficients (2/n)_k / k! are nonincreasing for n >= 2, so the
    // remaining terms are dominated by a geometric series in |z|^n.
    const double next_mag = coeff * std::abs(power) * rn / (static_cast<double>(n) * (k + 1) + 1.0);
    const double tail = next_mag / (1.0 - rn);
    if (tail <= 1e-17 * std::abs(sum)) {
      return sum;
    }
    coeff *= (alpha + k) / (k + 1.0);
    power *= zn;
  }
  throw NonConvergenceError("ngon_phi_series: |z| too close to 1");
}

}  // namespace harmshear
