#pragma once

#include <complex>
#include <functional>
#include <numbers>

#include "harmshear/errors.hpp"

namespace harmshear {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

/// Tolerances for the adaptive quadrature kernels.
///
/// A panel set is accepted once the summed error estimate is below
/// max(abs_tol, rel_tol * |result|). max_depth bounds the number of
/// bisections any single panel may undergo.
struct QuadratureConfig {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  int max_depth = 40;

  /// Throws ParamError unless rel_tol > 0, abs_tol > 0 and max_depth >= 1.
  void validate() const;
};

using SegmentIntegrand = std::function<Complex(Complex)>;
using IntervalIntegrand = std::function<Complex(double)>;

/// Rising factorial (alpha)_n = alpha (alpha+1) ... (alpha+n-1), (alpha)_0 = 1.
/// Throws NonFiniteError on overflow.
Complex pochhammer(Complex alpha, unsigned n);

/// Principal logarithm with imaginary part in (-pi, pi].
/// Throws DomainError at z = 0.
Complex principal_log(Complex z);

/// Principal power z^p = exp(p log z); 0^p = 0 for Re p > 0.
Complex principal_pow(Complex z, Complex p);

/// Contour integral of an analytic integrand along the straight segment
/// [from, to], by globally adaptive 21-point Gauss-Kronrod.
Complex integrate_segment(const SegmentIntegrand& integrand, Complex from, Complex to,
                          const QuadratureConfig& cfg = {});

/// Real-parameter variant of integrate_segment: integral of f(t) dt over [a, b].
Complex integrate_interval(const IntervalIntegrand& integrand, double a, double b,
                           const QuadratureConfig& cfg = {});

/// Integral over [0, 1] of an integrand that may carry power-type
/// singularities at either endpoint (tanh-sinh rule). Endpoints are never
/// evaluated.
Complex integrate_unit_interval(const IntervalIntegrand& integrand, const QuadratureConfig& cfg = {});

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace harmshear
