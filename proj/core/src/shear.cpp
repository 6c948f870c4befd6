#include "harmshear/shear.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace harmshear {

namespace {

constexpr double kRadiusSlack = 1e-15;
constexpr double kResonanceTol = 1e-12;

void require_oracle_radius(Complex z) {
  if (std::abs(z) > kMaxRadius + kRadiusSlack) {
    throw DomainError("shear evaluation requires |z| <= 0.999");
  }
}

void require_in_disk(Complex z, const char* who) {
  if (!(std::abs(z) < 1.0)) {
    throw DomainError(std::string(who) + ": requires |z| < 1");
  }
}

// int_0^z dzeta / ((zeta - eta)^2 (zeta - w)) for |w| = 1 and z inside the disk.
//
// When eta is close to w the partial-fraction form cancels catastrophically,
// so the integrand is expanded in delta = eta - w instead:
//   1/(zeta - eta)^2 = sum_j (j+1) delta^j / (zeta - w)^(j+2),
// integrated termwise. delta = 0 leaves the third-order pole term alone.
Complex pole_pair_integral(Complex eta, Complex w, Complex z) {
  const Complex delta = eta - w;
  const double radius = 0.25 * std::min(std::abs(z - w), 1.0);
  if (std::abs(delta) <= radius) {
    const Complex a = 1.0 / (z - w);
    const Complex b = 1.0 / (-w);
    Complex apow = a * a;
    Complex bpow = b * b;
    Complex dpow{1.0, 0.0};
    Complex sum{0.0, 0.0};
    for (int j = 0; j < 200; ++j) {
      const Complex term = (j + 1.0) * dpow * (apow - bpow) / -(j + 2.0);
      sum += term;
      if (term == Complex{0.0, 0.0} || std::abs(term) <= 1e-17 * std::abs(sum)) {
        break;
      }
      dpow *= delta;
      apow *= a;
      bpow *= b;
    }
    return sum;
  }
  const Complex inv = 1.0 / delta;
  return inv * (1.0 / (eta - z) - 1.0 / eta) -
         inv * inv * (principal_log(1.0 - z / eta) - principal_log(1.0 - z / w));
}

ShearEvaluation assemble(Complex h, Complex phi, Complex phi_prime, Complex omega) {
  ShearEvaluation e;
  e.h = h;
  e.g = h - phi;
  e.f = e.h + std::conj(e.g);
  e.h_prime = phi_prime / (1.0 - omega);
  e.g_prime = omega * e.h_prime;
  return e;
}

ShearEvaluation assemble_hg(Complex h, Complex g, Complex phi_prime, Complex omega) {
  ShearEvaluation e;
  e.h = h;
  e.g = g;
  e.f = h + std::conj(g);
  e.h_prime = phi_prime / (1.0 - omega);
  e.g_prime = omega * e.h_prime;
  return e;
}

Complex polygon_term(int n, int numerator, Complex z, Complex zn, const SpecfunConfig& cfg) {
  // z^j / j * F1(j/n, 1 + 2/n, 1; 1 + j/n; z^n, -z^n), j = numerator
  const double nd = static_cast<double>(n);
  const double a = numerator / nd;
  const AppellF1Params params{a, 1.0 + 2.0 / nd, 1.0, 1.0 + a};
  return ipow(z, numerator) / static_cast<double>(numerator) * appell_f1(params, zn, -zn, cfg);
}

std::optional<ShearEvaluation> closed_form_impl(const ConformalMapSpec& map,
                                                const MonomialDilatation& dil, Complex z,
                                                const SpecfunConfig& cfg, int b_term_sign) {
  if (!has_closed_form(map, dil)) {
    return std::nullopt;
  }
  if (map.is_slit()) {
    return slit_shear_closed(map.slit(), dil.power(), z, b_term_sign);
  }
  const int n = map.ngon().n();
  if (dil.power() == 2 * n) {
    return polygon_shear_z2n(map.ngon(), z, cfg);
  }
  return polygon_shear_z2(map.ngon(), z, cfg);
}

}  // namespace

MonomialDilatation::MonomialDilatation(int m) : m_(m) {
  if (m < 0) {
    throw ParamError("monomial dilatation requires m >= 0");
  }
}

Complex MonomialDilatation::omega(Complex z) const {
  return m_ == 0 ? Complex{0.0, 0.0} : ipow(z, m_);
}

Complex MonomialDilatation::q(Complex z) const {
  if (!liftable()) {
    throw NotLiftableError("omega = z^" + std::to_string(m_) + " is not a square");
  }
  return m_ == 0 ? Complex{0.0, 0.0} : ipow(z, m_ / 2);
}

ShearEvaluation shear_oracle(const ConformalMapSpec& map, const MonomialDilatation& dil, Complex z,
                             const QuadratureConfig& cfg) {
  require_oracle_radius(z);
  const Complex phi = map.phi(z, cfg);
  const Complex phi_prime = map.phi_prime(z);
  if (dil.is_zero()) {
    return assemble(phi, phi, phi_prime, Complex{0.0, 0.0});
  }
  const int m = dil.power();
  const Complex h = integrate_segment(
      [&](Complex zeta) { return map.phi_prime(zeta) / (1.0 - ipow(zeta, m)); }, Complex{}, z, cfg);
  return assemble(h, phi, phi_prime, dil.omega(z));
}

Complex slit_I10(Complex z) {
  require_in_disk(z, "slit_I10");
  return z / (2.0 * (1.0 - z)) + 0.25 * principal_log((1.0 + z) / (1.0 - z));
}

Complex slit_I1_half(Complex z) {
  require_in_disk(z, "slit_I1_half");
  return z / (2.0 * (1.0 + z)) + 0.25 * principal_log((1.0 + z) / (1.0 - z));
}

Complex slit_I1k(Complex z, int k, int n) {
  require_in_disk(z, "slit_I1k");
  if (n < 1 || k < 0 || k >= n) {
    throw IndexError("slit_I1k requires 0 <= k < n");
  }
  if (k == 0 || 2 * k == n) {
    throw IndexError("slit_I1k requires z_k != +-1");
  }
  const Complex zk = root_of_unity(k, n);
  return -zk * principal_log(1.0 - z) / (2.0 * (zk - 1.0)) +
         zk * principal_log(1.0 + z) / (2.0 * (zk + 1.0)) +
         zk / (zk * zk - 1.0) * principal_log(1.0 - z / zk);
}

Complex slit_I1(int n, Complex z) {
  if (n < 1) {
    throw IndexError("slit_I1 requires n >= 1");
  }
  Complex sum = slit_I10(z);
  if (n % 2 == 0) {
    sum += slit_I1_half(z);
  }
  for (int k = 1; k < n; ++k) {
    if (2 * k != n) {
      sum += slit_I1k(z, k, n);
    }
  }
  return sum / static_cast<double>(n);
}

Complex slit_I_eta(Complex eta, int n, Complex z) {
  require_in_disk(z, "slit_I_eta");
  if (n < 1) {
    throw IndexError("slit_I_eta requires n >= 1");
  }
  if (std::abs(ipow(eta, n) - 1.0) <= kResonanceTol) {
    throw ResonanceError("slit_I_eta: eta is an n-th root of unity; use slit_I3m");
  }
  Complex sum{0.0, 0.0};
  for (int k = 0; k < n; ++k) {
    const Complex zk = root_of_unity(k, n);
    sum -= zk * pole_pair_integral(eta, zk, z);
  }
  return sum / static_cast<double>(n);
}

Complex slit_I3m_pole_term(int m, int n, Complex z) {
  require_in_disk(z, "slit_I3m_pole_term");
  if (n < 1 || m < 0 || m >= n) {
    throw IndexError("slit_I3m requires 0 <= m < n");
  }
  const Complex zm = root_of_unity(m, n);
  const Complex d = z - zm;
  return zm / (2.0 * n) * (1.0 / (d * d) - 1.0 / (zm * zm));
}

Complex slit_I3m(int m, int n, Complex z) {
  Complex sum = slit_I3m_pole_term(m, n, z);
  const Complex zm = root_of_unity(m, n);
  Complex rest{0.0, 0.0};
  for (int k = 0; k < n; ++k) {
    if (k == m) {
      continue;
    }
    const Complex zk = root_of_unity(k, n);
    rest -= zk * pole_pair_integral(zm, zk, z);
  }
  return sum + rest / static_cast<double>(n);
}

std::optional<int> slit_resonance(const SlitMapParams& p, int n) {
  if (p.degenerate() || n < 1) {
    return std::nullopt;
  }
  if (const auto& frac = p.gamma_fraction()) {
    const long scaled = static_cast<long>(n) * frac->first;
    if (scaled % frac->second == 0) {
      return static_cast<int>(scaled / frac->second);
    }
    return std::nullopt;
  }
  const double x = p.gamma() * n / (2.0 * kPi);
  const double m = std::round(x);
  if (std::abs(x - m) <= kResonanceTol * std::max(1.0, x) && m >= 1.0 && m <= n - 1.0) {
    return static_cast<int>(m);
  }
  return std::nullopt;
}

SlitClosedFormTerms slit_closed_form_terms(const SlitMapParams& p, int n, Complex z) {
  if (p.degenerate()) {
    throw UnsupportedError("closed-form slit shear needs gamma in (0, pi); c = +-2 is degenerate");
  }
  if (n < 1) {
    throw IndexError("slit closed form requires n >= 1");
  }
  require_in_disk(z, "slit_closed_form_terms");

  SlitClosedFormTerms t;
  t.I10 = slit_I10(z);
  if (n % 2 == 0) {
    t.I1_half = slit_I1_half(z);
  }
  Complex sum = t.I10 + t.I1_half.value_or(Complex{});
  for (int k = 1; k < n; ++k) {
    if (2 * k == n) {
      continue;
    }
    t.k_indices.push_back(k);
    t.I1k.push_back(slit_I1k(z, k, n));
    sum += t.I1k.back();
  }
  t.I1 = sum / static_cast<double>(n);

  t.resonant_m = slit_resonance(p, n);
  if (t.resonant_m) {
    const int m = *t.resonant_m;
    t.I3 = slit_I3m(m, n, z);
    t.I2 = slit_I3m((n - m) % n, n, z);
  } else {
    const Complex eta = p.eta();
    t.I3 = slit_I_eta(eta, n, z);
    t.I2 = slit_I_eta(std::conj(eta), n, z);
  }
  return t;
}

ShearEvaluation slit_shear_closed(const SlitMapParams& p, int n, Complex z, int b_term_sign) {
  const SlitClosedFormTerms t = slit_closed_form_terms(p, n, z);
  const Complex eta = p.eta();
  const Complex h = 2.0 * p.A() * t.I1 + static_cast<double>(b_term_sign) * p.B() /
                                              (2.0 * std::sin(p.gamma())) * kI *
                                              (std::conj(eta) * t.I2 - eta * t.I3);
  return assemble(h, slit_phi(p, z), slit_phi_prime(p, z), ipow(z, n));
}

SlitMapParams corollary_slit_params(double alpha) {
  const double s = std::sin(alpha);
  const double c = std::cos(alpha);
  return SlitMapParams::from_rational_gamma(0.5 * s * s, c * c, 1, 4);
}

ShearEvaluation corollary_shear(double alpha, int n, Complex z, int i3_sign) {
  const SlitMapParams p = corollary_slit_params(alpha);
  const SlitClosedFormTerms t = slit_closed_form_terms(p, n, z);
  const double s = std::sin(alpha);
  const double c = std::cos(alpha);
  const Complex h = s * s * t.I1 - 0.5 * c * c * (t.I2 + static_cast<double>(i3_sign) * t.I3);
  return assemble(h, slit_phi(p, z), slit_phi_prime(p, z), ipow(z, n));
}

ShearEvaluation polygon_shear_z2n(const NGonParams& p, Complex z, const SpecfunConfig& cfg) {
  require_in_disk(z, "polygon_shear_z2n");
  const int n = p.n();
  const double nd = static_cast<double>(n);
  const Complex zn = ipow(z, n);
  const AppellF1Params hp{1.0 / nd, 1.0 + 2.0 / nd, 1.0, 1.0 + 1.0 / nd};
  const AppellF1Params gp{2.0 + 1.0 / nd, 1.0 + 2.0 / nd, 1.0, 3.0 + 1.0 / nd};
  const Complex h = z * appell_f1(hp, zn, -zn, cfg);
  const Complex g = ipow(z, 2 * n + 1) / (2.0 * nd + 1.0) * appell_f1(gp, zn, -zn, cfg);
  return assemble_hg(h, g, ngon_phi_prime(p, z), ipow(z, 2 * n));
}

ShearEvaluation polygon_shear_z2(const NGonParams& p, Complex z, const SpecfunConfig& cfg) {
  const int n = p.n();
  if (n % 2 == 0) {
    throw ParityError("polygon_shear_z2 requires odd n");
  }
  require_in_disk(z, "polygon_shear_z2");
  const Complex zn = ipow(z, n);
  Complex shared{0.0, 0.0};  // k = 1..n-1
  for (int k = 1; k < n; ++k) {
    shared += polygon_term(n, 2 * k + 1, z, zn, cfg);
  }
  const Complex h = polygon_term(n, 1, z, zn, cfg) + shared;
  const Complex g = shared + polygon_term(n, 2 * n + 1, z, zn, cfg);
  return assemble_hg(h, g, ngon_phi_prime(p, z), z * z);
}

bool has_closed_form(const ConformalMapSpec& map, const MonomialDilatation& dil) {
  if (dil.is_zero()) {
    return false;
  }
  if (map.is_slit()) {
    return !map.slit().degenerate();
  }
  const int n = map.ngon().n();
  return dil.power() == 2 * n || (dil.power() == 2 && n % 2 == 1);
}

std::optional<ShearEvaluation> shear_closed_form(const ConformalMapSpec& map,
                                                 const MonomialDilatation& dil, Complex z,
                                                 const SpecfunConfig& cfg) {
  return closed_form_impl(map, dil, z, cfg, kSlitBTermSign);
}

ShearEvaluation shear_evaluate(const ConformalMapSpec& map, const MonomialDilatation& dil,
                               Complex z, const QuadratureConfig& cfg) {
  require_oracle_radius(z);
  SpecfunConfig sf;
  sf.quadrature = cfg;
  if (auto closed = shear_closed_form(map, dil, z, sf)) {
    return *closed;
  }
  return shear_oracle(map, dil, z, cfg);
}

Complex central_difference(const std::function<Complex(Complex)>& f, Complex z, double step) {
  const Complex h{step, 0.0};
  return (-f(z + 2.0 * h) + 8.0 * f(z + h) - 8.0 * f(z - h) + f(z - 2.0 * h)) / (12.0 * step);
}

ShearReport verify_shear(const ConformalMapSpec& map, const MonomialDilatation& dil,
                         std::span<const Complex> samples, const QuadratureConfig& cfg,
                         const ShearThresholds& thresholds, int b_term_sign) {
  ShearReport report;
  report.samples = samples.size();
  report.min_jacobian = std::numeric_limits<double>::infinity();

  SpecfunConfig sf;
  sf.quadrature = cfg;
  const bool closed = has_closed_form(map, dil);
  if (closed) {
    report.max_closed_form_deviation = 0.0;
    report.max_fd_dilatation_residual = 0.0;
  }

  for (const Complex z : samples) {
    const ShearEvaluation oracle = shear_oracle(map, dil, z, cfg);
    const Complex phi = map.phi(z, cfg);
    const Complex omega = dil.omega(z);

    report.max_construction_residual =
        std::max(report.max_construction_residual, std::abs(oracle.h - oracle.g - phi));
    report.max_dilatation_residual =
        std::max(report.max_dilatation_residual,
                 std::abs(oracle.g_prime - omega * oracle.h_prime) / std::abs(oracle.h_prime));
    report.min_jacobian = std::min(report.min_jacobian, oracle.jacobian());

    if (!closed) {
      continue;
    }
    const ShearEvaluation cf = *closed_form_impl(map, dil, z, sf, b_term_sign);
    report.max_construction_residual =
        std::max(report.max_construction_residual, std::abs(cf.h - cf.g - phi));
    report.max_closed_form_deviation =
        std::max({*report.max_closed_form_deviation, std::abs(cf.h - oracle.h),
                  std::abs(cf.g - oracle.g)});
    report.min_jacobian = std::min(report.min_jacobian, cf.jacobian());

    const double step = 1e-3 * std::min(1.0, 10.0 * (1.0 - std::abs(z)));
    const Complex dh = central_difference(
        [&](Complex w) { return closed_form_impl(map, dil, w, sf, b_term_sign)->h; }, z, step);
    const Complex dg = central_difference(
        [&](Complex w) { return closed_form_impl(map, dil, w, sf, b_term_sign)->g; }, z, step);
    report.max_fd_dilatation_residual = std::max(*report.max_fd_dilatation_residual,
                                                 std::abs(dg - omega * dh) / std::abs(dh));
  }
  if (samples.empty()) {
    report.min_jacobian = 0.0;
  }

  auto flag = [&](bool bad, const std::string& what, double value, double limit) {
    if (bad) {
      std::ostringstream os;
      os << what << " = " << value << " (limit " << limit << ")";
      report.failures.push_back(os.str());
    }
  };
  flag(report.max_construction_residual >= thresholds.construction, "construction residual",
       report.max_construction_residual, thresholds.construction);
  flag(report.max_dilatation_residual >= thresholds.dilatation, "dilatation residual",
       report.max_dilatation_residual, thresholds.dilatation);
  flag(!samples.empty() && !(report.min_jacobian > 0.0), "min Jacobian", report.min_jacobian, 0.0);
  if (closed) {
    flag(*report.max_closed_form_deviation >= thresholds.closed_form, "closed form vs oracle",
         *report.max_closed_form_deviation, thresholds.closed_form);
    flag(*report.max_fd_dilatation_residual >= thresholds.fd_dilatation,
         "finite-difference dilatation residual", *report.max_fd_dilatation_residual,
         thresholds.fd_dilatation);
  }
  return report;
}

}  // namespace harmshear
