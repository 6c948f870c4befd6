#pragma once

#include "harmshear/numerics.hpp"

namespace harmshear {

/// Parameters of the Gauss hypergeometric function 2F1(a, b; c; z).
struct Gauss2F1Params {
  Complex a;
  Complex b;
  Complex c;
};

/// Parameters of the first Appell function F1(a, b1, b2; c; x, y).
struct AppellF1Params {
  Complex a;
  Complex b1;
  Complex b2;
  Complex c;
};

/// Route selection and accuracy knobs shared by the hypergeometric evaluators.
struct SpecfunConfig {
  /// Series is used while the largest argument modulus is at or below this.
  double series_radius = 0.7;
  /// Target relative size of the certified series tail.
  double series_tol = 1e-15;
  /// Hard cap on the number of series terms (total degree for F1).
  int max_terms = 100000;
  QuadratureConfig quadrature{};
};

/// Log-Gamma, analytic branch on Re z > 0 (real for real positive z);
/// reflection for Re z < 1/2. Throws PoleError at nonpositive integers.
Complex log_gamma(Complex z);

/// Gamma(z) = exp(log_gamma(z)).
Complex gamma_fn(Complex z);

/// 2F1 by its power series, summed until a rigorous geometric majorant of
/// the tail is below cfg.series_tol * |sum|. Requires |z| < 1.
Complex gauss_2f1_series(const Gauss2F1Params& p, Complex z, const SpecfunConfig& cfg = {});

/// 2F1 by the Euler integral. Needs Re c > Re b > 0 or Re c > Re a > 0
/// (a and b are swapped internally when only the latter holds).
Complex gauss_2f1_euler(const Gauss2F1Params& p, Complex z, const SpecfunConfig& cfg = {});

/// 2F1 with automatic route selection (series inside cfg.series_radius,
/// Euler integral outside when admissible).
Complex gauss_2f1(const Gauss2F1Params& p, Complex z, const SpecfunConfig& cfg = {});

/// Appell F1 by its double series, grouped by total degree k + l with a
/// certified tail bound. Requires max(|x|, |y|) < 1.
Complex appell_f1_series(const AppellF1Params& p, Complex x, Complex y, const SpecfunConfig& cfg = {});

/// Appell F1 by the Euler integral
///   Gamma(c)/(Gamma(a) Gamma(c-a)) int_0^1 t^(a-1) (1-t)^(c-a-1) (1-xt)^(-b1) (1-yt)^(-b2) dt.
/// Requires Re c > Re a > 0.
Complex appell_f1_euler(const AppellF1Params& p, Complex x, Complex y,
                        const QuadratureConfig& cfg = {});

/// Appell F1 with automatic route selection: double series when
/// max(|x|, |y|) <= cfg.series_radius, Euler integral otherwise.
Complex appell_f1(const AppellF1Params& p, Complex x, Complex y, const SpecfunConfig& cfg = {});

}  // namespace harmshear
