#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "harmshear/maps.hpp"
#include "harmshear/specfun.hpp"

namespace harmshear {

/// Dilatation omega(z) = z^m; m = 0 stands for omega = 0 (the identity shear).
class MonomialDilatation {
 public:
  explicit MonomialDilatation(int m);

  int power() const { return m_; }
  bool is_zero() const { return m_ == 0; }
  /// omega = q^2 for an analytic q exactly when m is even.
  bool liftable() const { return m_ % 2 == 0; }

  Complex omega(Complex z) const;
  /// q(z) = z^(m/2), with q = 0 when omega = 0. Throws NotLiftableError for odd m.
  Complex q(Complex z) const;

 private:
  int m_;
};

/// h, g, f = h + conj(g) and the derivatives h', g' at one disk point.
struct ShearEvaluation {
  Complex h;
  Complex g;
  Complex f;
  Complex h_prime;
  Complex g_prime;

  double jacobian() const { return std::norm(h_prime) - std::norm(g_prime); }
};

/// Quadrature oracle: h = int_0^z phi'/(1 - omega), g = h - phi, f = h + conj(g).
/// Requires |z| <= kMaxRadius.
ShearEvaluation shear_oracle(const ConformalMapSpec& map, const MonomialDilatation& dil, Complex z,
                             const QuadratureConfig& cfg = {});

// ---------------------------------------------------------------------------
// Four-slit map with omega(z) = z^n: partial-fraction closed forms.
//
//   h = 2A I1 + s (B / (2 sin gamma)) i (conj(eta) I2 - eta I3),  s = kSlitBTermSign
//   I1 = int_0^z dzeta / ((1 - zeta^2)(1 - zeta^n))
//   I2 = int_0^z dzeta / ((zeta - conj(eta))^2 (1 - zeta^n))
//   I3 = int_0^z dzeta / ((zeta - eta)^2 (1 - zeta^n))
// ---------------------------------------------------------------------------

/// Sign of the B-term in the assembled h, pinned against shear_oracle.
inline constexpr int kSlitBTermSign = -1;

/// int_0^z dzeta / ((1 - zeta)^2 (1 + zeta))
Complex slit_I10(Complex z);
/// int_0^z z_k dzeta / ((1 - zeta)(1 + zeta)(z_k - zeta)), z_k = e^(2 pi i k/n) != +-1.
Complex slit_I1k(Complex z, int k, int n);
/// int_0^z dzeta / ((1 + zeta)^2 (1 - zeta))
Complex slit_I1_half(Complex z);
/// I1 assembled from the pieces above (I_{1,n/2} present exactly when n is even).
Complex slit_I1(int n, Complex z);

/// int_0^z dzeta / ((zeta - eta)^2 (1 - zeta^n)) for |eta| = 1, eta^n != 1.
/// Throws ResonanceError when eta is an n-th root of unity.
Complex slit_I_eta(Complex eta, int n, Complex z);
/// int_0^z dzeta / ((zeta - z_m)^2 (1 - zeta^n)), 0 <= m <= n-1.
Complex slit_I3m(int m, int n, Complex z);
/// Third-order pole contribution of slit_I3m: (z_m / (2n)) [1/(z - z_m)^2 - 1/z_m^2].
Complex slit_I3m_pole_term(int m, int n, Complex z);

/// m with gamma = 2 pi m / n, if any (exact for rational gamma, 1e-12 otherwise).
std::optional<int> slit_resonance(const SlitMapParams& p, int n);

struct SlitClosedFormTerms {
  Complex I1;
  Complex I2;
  Complex I3;
  Complex I10;
  std::vector<int> k_indices;  // N_{0} (odd n) or N_{0,n/2} (even n)
  std::vector<Complex> I1k;    // aligned with k_indices
  std::optional<Complex> I1_half;
  std::optional<int> resonant_m;  // set when I2 = I_{3,n-m}, I3 = I_{3,m}
};

SlitClosedFormTerms slit_closed_form_terms(const SlitMapParams& p, int n, Complex z);

/// Closed-form shear of the slit map with omega = z^n; g = h - phi.
/// Throws UnsupportedError for the degenerate kinds.
ShearEvaluation slit_shear_closed(const SlitMapParams& p, int n, Complex z,
                                  int b_term_sign = kSlitBTermSign);

/// The slit map with A = sin^2(alpha)/2, B = cos^2(alpha), c = 0.
SlitMapParams corollary_slit_params(double alpha);

/// Sign in front of I3 in h = sin^2(alpha) I1 - (cos^2(alpha)/2)(I2 + s I3), pinned
/// against shear_oracle.
inline constexpr int kCorollaryI3Sign = +1;

/// Closed-form shear of the corollary map with omega = z^n.
ShearEvaluation corollary_shear(double alpha, int n, Complex z, int i3_sign = kCorollaryI3Sign);

// ---------------------------------------------------------------------------
// Regular n-gon map: Appell F1 closed forms.
// ---------------------------------------------------------------------------

/// omega = z^(2n): h = z F1(1/n, 1+2/n, 1; 1+1/n; z^n, -z^n),
/// g = z^(2n+1)/(2n+1) F1(2+1/n, 1+2/n, 1; 3+1/n; z^n, -z^n).
ShearEvaluation polygon_shear_z2n(const NGonParams& p, Complex z, const SpecfunConfig& cfg = {});

/// omega = z^2 for odd n: h = sum_{k=0}^{n-1} T_k, g = sum_{k=1}^{n} T_k with
/// T_k = z^(2k+1)/(2k+1) F1((2k+1)/n, 1+2/n, 1; 1+(2k+1)/n; z^n, -z^n).
/// Throws ParityError for even n.
ShearEvaluation polygon_shear_z2(const NGonParams& p, Complex z, const SpecfunConfig& cfg = {});

/// Whether a closed form exists for (map, dilatation).
bool has_closed_form(const ConformalMapSpec& map, const MonomialDilatation& dil);

/// Closed form when has_closed_form, std::nullopt otherwise.
std::optional<ShearEvaluation> shear_closed_form(const ConformalMapSpec& map,
                                                 const MonomialDilatation& dil, Complex z,
                                                 const SpecfunConfig& cfg = {});

/// Closed form when available, quadrature oracle otherwise.
ShearEvaluation shear_evaluate(const ConformalMapSpec& map, const MonomialDilatation& dil,
                               Complex z, const QuadratureConfig& cfg = {});

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

struct ShearThresholds {
  double construction = 1e-10;
  double dilatation = 1e-12;      // relative to |h'|
  double closed_form = 1e-9;
  double fd_dilatation = 1e-7;    // relative, finite-difference derivatives
};

struct ShearReport {
  std::size_t samples = 0;
  double max_construction_residual = 0.0;  // |h - g - phi|
  double max_dilatation_residual = 0.0;    // |g' - omega h'| / |h'|
  double min_jacobian = 0.0;
  std::optional<double> max_closed_form_deviation;    // closed form vs oracle, h and g
  std::optional<double> max_fd_dilatation_residual;  // |Dg - omega Dh| / |Dh|
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Fourth-order central difference of an analytic function along the real direction.
Complex central_difference(const std::function<Complex(Complex)>& f, Complex z, double step);

/// Runs the construction, dilatation, Jacobian and closed-form checks at the samples.
ShearReport verify_shear(const ConformalMapSpec& map, const MonomialDilatation& dil,
                         std::span<const Complex> samples, const QuadratureConfig& cfg = {},
                         const ShearThresholds& thresholds = {},
                         int b_term_sign = kSlitBTermSign);

}  // namespace harmshear
