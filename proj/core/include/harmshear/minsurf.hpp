#pragma once

#include <optional>

#include "harmshear/shear.hpp"

namespace harmshear {

/// Values of the Weierstrass-Enneper data (phi1, phi2, phi3) at one point.
struct WeierstrassTriple {
  Complex phi1;
  Complex phi2;
  Complex phi3;

  /// phi1^2 + phi2^2 + phi3^2, zero for an isothermal parametrization.
  Complex isotropy() const { return phi1 * phi1 + phi2 * phi2 + phi3 * phi3; }
  /// |isotropy| / (|phi1|^2 + |phi2|^2 + |phi3|^2).
  double relative_isotropy_residual() const;
};

/// Point (u, v, w) = (Re f, Im f, 2 Im psi) of the lifted surface over disk point `source`.
struct SurfaceSample {
  Complex source;
  double u;
  double v;
  double w;
};

/// psi(z) = int_0^z q(zeta) phi'(zeta) / (1 - omega(zeta)) dzeta by segment quadrature.
/// Throws NotLiftableError for odd m.
Complex psi_oracle(const ConformalMapSpec& map, const MonomialDilatation& dil, Complex z,
                   const QuadratureConfig& cfg = {});

/// n-gon lift for omega = z^(2n):
///   psi = z^(n+1)/(n+1) F1(1+1/n, 1+2/n, 1; 2+1/n; z^n, -z^n).
Complex psi_polygon_z2n(const NGonParams& p, Complex z, const SpecfunConfig& cfg = {});

/// n-gon lift for omega = z^2, n odd:
///   psi = sum_{k=0}^{n-1} z^(2k+2)/(2k+2) F1((2k+2)/n, 1+2/n, 1; 1+(2k+2)/n; z^n, -z^n).
Complex psi_polygon_z2(const NGonParams& p, Complex z, const SpecfunConfig& cfg = {});

/// Closed-form psi when one exists for (map, dil).
std::optional<Complex> psi_closed_form(const ConformalMapSpec& map, const MonomialDilatation& dil,
                                       Complex z, const SpecfunConfig& cfg = {});

/// phi1 = h' + g', phi2 = -i (h' - g'), phi3 = -2 i q h'. Assumes g' = q^2 h'.
WeierstrassTriple weierstrass_triple(Complex h_prime, Complex g_prime, Complex q);

/// Surface point, using closed forms when available and the oracle otherwise.
SurfaceSample surface_point(const ConformalMapSpec& map, const MonomialDilatation& dil, Complex z,
                            const QuadratureConfig& cfg = {});

/// Same, forcing the quadrature oracle for both f and psi.
SurfaceSample surface_point_oracle(const ConformalMapSpec& map, const MonomialDilatation& dil,
                                   Complex z, const QuadratureConfig& cfg = {});

}  // namespace harmshear
