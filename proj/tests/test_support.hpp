#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "harmshear/numerics.hpp"

namespace harmshear::testing {

// Romberg integration along the segment [a, b]. Independent of the library
// kernels; accurate to near machine precision for integrands analytic in a
// neighborhood of the segment.
inline Complex romberg_segment(const std::function<Complex(Complex)>& f, Complex a, Complex b,
                               int levels = 14) {
  std::vector<std::vector<Complex>> R(static_cast<std::size_t>(levels));
  const Complex d = b - a;
  R[0].push_back(0.5 * d * (f(a) + f(b)));
  for (int i = 1; i < levels; ++i) {
    const long panels = 1L << (i - 1);
    const Complex h = d / static_cast<double>(2 * panels);
    Complex mid{};
    for (long k = 0; k < panels; ++k) {
      mid += f(a + h * static_cast<double>(2 * k + 1));
    }
    R[i].push_back(0.5 * R[i - 1][0] + h * mid);
    double p = 4.0;
    for (int j = 1; j <= i; ++j, p *= 4.0) {
      R[i].push_back(R[i][j - 1] + (R[i][j - 1] - R[i - 1][j - 1]) / (p - 1.0));
    }
    if (i > 4 && std::abs(R[i][i] - R[i - 1][i - 1]) <= 1e-15 * std::abs(R[i][i])) {
      return R[i][i];
    }
  }
  return R[levels - 1][levels - 1];
}

// Truncated double series sum_{k<=K, l<=L} of Appell F1.
inline Complex brute_f1(Complex a, Complex b1, Complex b2, Complex c, Complex x, Complex y,
                        int K = 200, int L = 200) {
  // Row l = 0 terms (a)_k (b1)_k / ((c)_k k!) x^k, then step l with the ratio
  // (a+k+l)(b2+l) / ((c+k+l)(l+1)) y.
  std::vector<Complex> row(static_cast<std::size_t>(K + 1));
  row[0] = 1.0;
  for (int k = 1; k <= K; ++k) {
    const double kd = k - 1.0;
    row[k] = row[k - 1] * (a + kd) * (b1 + kd) / ((c + kd) * (kd + 1.0)) * x;
  }
  Complex sum{};
  for (int l = 0; l <= L; ++l) {
    for (int k = 0; k <= K; ++k) {
      sum += row[k];
    }
    const double ld = l;
    for (int k = 0; k <= K; ++k) {
      const double kl = k + ld;
      row[k] *= (a + kl) * (b2 + ld) / ((c + kl) * (ld + 1.0)) * y;
    }
  }
  return sum;
}

// Truncated 2F1 series.
inline Complex brute_2f1(Complex a, Complex b, Complex c, Complex z, int terms = 4000) {
  Complex term = 1.0;
  Complex sum = 1.0;
  for (int k = 0; k < terms; ++k) {
    term *= (a + double(k)) * (b + double(k)) / ((c + double(k)) * (k + 1.0)) * z;
    sum += term;
  }
  return sum;
}

// Fourth-order central difference along the real direction.
inline Complex central_diff(const std::function<Complex(Complex)>& f, Complex z, double h) {
  return (-f(z + 2.0 * h) + 8.0 * f(z + h) - 8.0 * f(z - h) + f(z - 2.0 * h)) / (12.0 * h);
}

inline std::vector<Complex> disk_points(std::size_t count, double radius, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Complex> pts;
  for (std::size_t i = 0; i < count; ++i) {
    const double r = radius * std::sqrt(unit(rng));
    pts.push_back(std::polar(r, 2.0 * kPi * unit(rng)));
  }
  return pts;
}

}  // namespace harmshear::testing
