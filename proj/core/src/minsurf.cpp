#include "harmshear/minsurf.hpp"

#include <cmath>

namespace harmshear {

namespace {

void require_liftable(const MonomialDilatation& dil) {
  if (!dil.liftable()) {
    throw NotLiftableError("omega = z^" + std::to_string(dil.power()) +
                           " is not the square of an analytic function");
  }
}

SurfaceSample make_sample(Complex z, Complex f, Complex psi) {
  return {z, f.real(), f.imag(), 2.0 * psi.imag()};
}

}  // namespace

double WeierstrassTriple::relative_isotropy_residual() const {
  const double scale = std::norm(phi1) + std::norm(phi2) + std::norm(phi3);
  return scale == 0.0 ? 0.0 : std::abs(isotropy()) / scale;
}

Complex psi_oracle(const ConformalMapSpec& map, const MonomialDilatation& dil, Complex z,
                   const QuadratureConfig& cfg) {
  require_liftable(dil);
  if (std::abs(z) > kMaxRadius + 1e-15) {
    throw DomainError("psi_oracle requires |z| <= 0.999");
  }
  if (dil.is_zero()) {
    return {0.0, 0.0};
  }
  return integrate_segment(
      [&](Complex zeta) {
        return dil.q(zeta) * map.phi_prime(zeta) / (1.0 - dil.omega(zeta));
      },
      Complex{}, z, cfg);
}

Complex psi_polygon_z2n(const NGonParams& p, Complex z, const SpecfunConfig& cfg) {
  if (!(std::abs(z) < 1.0)) {
    throw DomainError("psi_polygon_z2n requires |z| < 1");
  }
  const int n = p.n();
  const double nd = static_cast<double>(n);
  const Complex zn = ipow(z, n);
  const AppellF1Params params{1.0 + 1.0 / nd, 1.0 + 2.0 / nd, 1.0, 2.0 + 1.0 / nd};
  return ipow(z, n + 1) / (nd + 1.0) * appell_f1(params, zn, -zn, cfg);
}

Complex psi_polygon_z2(const NGonParams& p, Complex z, const SpecfunConfig& cfg) {
  const int n = p.n();
  if (n % 2 == 0) {
    throw ParityError("psi_polygon_z2 requires odd n");
  }
  if (!(std::abs(z) < 1.0)) {
    throw DomainError("psi_polygon_z2 requires |z| < 1");
  }
  const double nd = static_cast<double>(n);
  const Complex zn = ipow(z, n);
  Complex sum{0.0, 0.0};
  for (int k = 0; k < n; ++k) {
    const int j = 2 * (k + 1);
    const double a = j / nd;
    const AppellF1Params params{a, 1.0 + 2.0 / nd, 1.0, 1.0 + a};
    sum += ipow(z, j) / static_cast<double>(j) * appell_f1(params, zn, -zn, cfg);
  }
  return sum;
}

std::optional<Complex> psi_closed_form(const ConformalMapSpec& map, const MonomialDilatation& dil,
                                       Complex z, const SpecfunConfig& cfg) {
  if (!map.is_ngon() || dil.is_zero()) {
    return std::nullopt;
  }
  const int n = map.ngon().n();
  if (dil.power() == 2 * n) {
    return psi_polygon_z2n(map.ngon(), z, cfg);
  }
  if (dil.power() == 2 && n % 2 == 1) {
    return psi_polygon_z2(map.ngon(), z, cfg);
  }
  return std::nullopt;
}

WeierstrassTriple weierstrass_triple(Complex h_prime, Complex g_prime, Complex q) {
  return {h_prime + g_prime, -kI * (h_prime - g_prime), -2.0 * kI * q * h_prime};
}

SurfaceSample surface_point(const ConformalMapSpec& map, const MonomialDilatation& dil, Complex z,
                            const QuadratureConfig& cfg) {
  require_liftable(dil);
  SpecfunConfig sf;
  sf.quadrature = cfg;
  const ShearEvaluation shear = shear_evaluate(map, dil, z, cfg);
  Complex psi;
  if (auto closed = psi_closed_form(map, dil, z, sf)) {
    psi = *closed;
  } else {
    psi = psi_oracle(map, dil, z, cfg);
  }
  return make_sample(z, shear.f, psi);
}

SurfaceSample surface_point_oracle(const ConformalMapSpec& map, const MonomialDilatation& dil,
                                   Complex z, const QuadratureConfig& cfg) {
  require_liftable(dil);
  const ShearEvaluation shear = shear_oracle(map, dil, z, cfg);
  return make_sample(z, shear.f, psi_oracle(map, dil, z, cfg));
}

}  // namespace harmshear
