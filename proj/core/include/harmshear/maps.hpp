#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "harmshear/numerics.hpp"

namespace harmshear {

/// Largest disk radius at which maps and shears are evaluated.
inline constexpr double kMaxRadius = 0.999;

enum class SlitKind {
  Generic,           // c = -2 cos(gamma), gamma in (0, pi)
  DegenerateMinus2,  // c = -2: rational term B z / (1 - z)^2
  DegeneratePlus2,   // c = +2: rational term B z / (1 + z)^2
};

/// Parameters of the four-slit map
///   phi(z) = A log((1+z)/(1-z)) + B z / (1 + c z + z^2),  c = -2 cos(gamma).
class SlitMapParams {
 public:
  static SlitMapParams from_gamma(double A, double B, double gamma);
  /// c in [-2, 2]; c = +-2 selects the degenerate kinds.
  static SlitMapParams from_c(double A, double B, double c);
  /// gamma = 2 pi num / den with 0 < num/den < 1/2; the fraction is kept for
  /// exact resonance detection.
  static SlitMapParams from_rational_gamma(double A, double B, long num, long den);

  double A() const { return A_; }
  double B() const { return B_; }
  double c() const { return c_; }
  SlitKind kind() const { return kind_; }
  bool degenerate() const { return kind_ != SlitKind::Generic; }

  /// Throws UnsupportedError for the degenerate kinds.
  double gamma() const;
  /// eta = e^(i gamma). Throws UnsupportedError for the degenerate kinds.
  Complex eta() const;
  /// gamma / (2 pi) as a reduced fraction, when constructed from one.
  const std::optional<std::pair<long, long>>& gamma_fraction() const { return fraction_; }

 private:
  SlitMapParams(double A, double B, double c, double gamma, SlitKind kind);

  double A_;
  double B_;
  double c_;
  double gamma_;
  SlitKind kind_;
  std::optional<std::pair<long, long>> fraction_;
};

/// Regular n-gon map phi(z) = int_0^z (1 - zeta^n)^(-2/n) dzeta, n >= 3.
class NGonParams {
 public:
  explicit NGonParams(int n);
  int n() const { return n_; }

 private:
  int n_;
};

/// Horizontal half-line {anchor + s * direction : s >= 0}.
struct HalfLine {
  enum class Direction { PositiveReal, NegativeReal };

  Complex anchor;
  Direction direction;

  double sign() const { return direction == Direction::PositiveReal ? 1.0 : -1.0; }
};

/// A catalog conformal map: four-slit or regular n-gon.
class ConformalMapSpec {
 public:
  static ConformalMapSpec four_slit(SlitMapParams p) { return ConformalMapSpec(p); }
  static ConformalMapSpec regular_ngon(NGonParams p) { return ConformalMapSpec(p); }

  bool is_slit() const { return std::holds_alternative<SlitMapParams>(variant_); }
  bool is_ngon() const { return std::holds_alternative<NGonParams>(variant_); }
  const SlitMapParams& slit() const { return std::get<SlitMapParams>(variant_); }
  const NGonParams& ngon() const { return std::get<NGonParams>(variant_); }

  /// phi(z); the n-gon map is evaluated by segment quadrature.
  Complex phi(Complex z, const QuadratureConfig& cfg = {}) const;
  Complex phi_prime(Complex z) const;

 private:
  explicit ConformalMapSpec(SlitMapParams p) : variant_(p) {}
  explicit ConformalMapSpec(NGonParams p) : variant_(p) {}

  std::variant<SlitMapParams, NGonParams> variant_;
};

/// z^k for integer k >= 0 by repeated squaring.
Complex ipow(Complex z, int k);

/// e^(2 pi i k / n), exact on the coordinate axes and conjugate-symmetric in k.
Complex root_of_unity(int k, int n);

/// z_k = e^(2 pi i k / n), k = 0..n-1.
std::vector<Complex> roots_of_unity(int n);

/// -(1/n) sum_k z_k / (z - z_k), which equals 1/(1 - z^n).
/// Throws PoleError when z^n = 1.
Complex partial_fraction_inv_one_minus_zn(int n, Complex z);

Complex slit_phi(const SlitMapParams& p, Complex z);
Complex slit_phi_prime(const SlitMapParams& p, Complex z);

/// Omitted half-lines of the slit image for c in {-2, 0, 2}; UnsupportedError otherwise.
/// c = -2: two half-lines to -inf; c = +2: two to +inf; c = 0: four.
std::vector<HalfLine> slit_omitted_halflines(const SlitMapParams& p);

/// Radial-limit probe of one omitted half-line: phi(r e^(i theta)) at the
/// boundary angle theta whose image is the half-line's finite endpoint.
struct SlitEndpointTrace {
  HalfLine halfline;
  double theta;
  Complex traced;

  double real_gap() const { return std::abs(traced.real() - halfline.anchor.real()); }
  double imag_gap() const { return std::abs(traced.imag() - halfline.anchor.imag()); }
};

/// Probes every half-line from slit_omitted_halflines at radius r.
std::vector<SlitEndpointTrace> trace_slit_endpoints(const SlitMapParams& p, double r);

/// Coefficient of z^(n k + 1) in the termwise-integrated binomial series of the n-gon map.
double ngon_series_coefficient(int n, int k);

Complex ngon_phi(const NGonParams& p, Complex z, const QuadratureConfig& cfg = {});
/// Series route sum_k ((2/n)_k / k!) z^(nk+1) / (nk+1) with a certified tail.
Complex ngon_phi_series(const NGonParams& p, Complex z);
Complex ngon_phi_prime(const NGonParams& p, Complex z);

}  // namespace harmshear
