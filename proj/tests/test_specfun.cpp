#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "harmshear/specfun.hpp"
#include "test_support.hpp"

namespace hs = harmshear;
using hs::Complex;

namespace {

double rel(Complex got, Complex want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace

TEST(LogGamma, Values) {
  EXPECT_NEAR(std::abs(hs::log_gamma(1.0)), 0.0, 1e-15);
  EXPECT_NEAR(hs::log_gamma(5.0).real(), std::log(24.0), 1e-14);
  EXPECT_NEAR(hs::log_gamma(5.0).real(), 3.1780538, 5e-8);
  EXPECT_NEAR(hs::log_gamma(0.5).real(), 0.5 * std::log(hs::kPi), 1e-14);
  EXPECT_NEAR(hs::log_gamma(0.5).real(), 0.5723649, 5e-8);
}

TEST(LogGamma, MatchesStdLgammaOnRealAxis) {
  for (double x : {0.01, 0.3, 1.7, 4.25, 11.5, 33.3, 170.2}) {
    EXPECT_NEAR(hs::log_gamma(x).real(), std::lgamma(x), 1e-13 * std::max(1.0, std::lgamma(x)))
        << x;
    EXPECT_EQ(hs::log_gamma(x).imag(), 0.0);
  }
}

TEST(LogGamma, ReflectionAndRecurrence) {
  // Gamma(z+1) = z Gamma(z) on complex arguments, including Re z < 0.
  for (Complex z : {Complex(0.3, 1.2), Complex(-2.4, 0.7), Complex(3.1, -5.5), Complex(-0.5, -0.5)}) {
    const Complex lhs = hs::gamma_fn(z + 1.0);
    const Complex rhs = z * hs::gamma_fn(z);
    EXPECT_LE(std::abs(lhs - rhs), 1e-12 * std::abs(rhs)) << z;
  }
  // Gamma(z) Gamma(1-z) = pi / sin(pi z).
  const Complex z{0.25, 0.4};
  const Complex prod = hs::gamma_fn(z) * hs::gamma_fn(1.0 - z);
  EXPECT_LE(std::abs(prod - hs::kPi / std::sin(hs::kPi * z)), 1e-12 * std::abs(prod));
}

TEST(LogGamma, PolesThrow) {
  EXPECT_THROW(hs::log_gamma(0.0), hs::PoleError);
  EXPECT_THROW(hs::log_gamma(-3.0), hs::PoleError);
}

TEST(Gauss2F1, Trivial) {
  EXPECT_EQ(hs::gauss_2f1({0.3, 1.2, 2.5}, 0.0), Complex(1.0));
  EXPECT_NEAR(std::abs(hs::gauss_2f1({2.0, 5.0, 5.0}, 0.5) - 4.0), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(hs::gauss_2f1_euler({2.0, 5.0, 5.0}, 0.5) - 4.0), 0.0, 1e-11);
}

TEST(Gauss2F1, DualRoute) {
  const hs::Gauss2F1Params p{1.0 / 3.0, 1.0 + 2.0 / 3.0, 1.0 + 1.0 / 3.0};
  const Complex z{0.4, 0.2};
  EXPECT_LE(std::abs(hs::gauss_2f1_series(p, z) - hs::gauss_2f1_euler(p, z)), 1e-10);
  EXPECT_LE(std::abs(hs::gauss_2f1_series(p, z) - hs::testing::brute_2f1(p.a, p.b, p.c, z)), 1e-13);
}

TEST(Gauss2F1, ElementaryClosedForms) {
  // 2F1(1,1;2;z) = -log(1-z)/z.
  for (Complex z : {Complex(0.5, 0.1), Complex(-0.8, 0.3), Complex(0.9, 0.0), Complex(0.1, -0.95)}) {
    const Complex want = -std::log(1.0 - z) / z;
    EXPECT_LE(rel(hs::gauss_2f1({1.0, 1.0, 2.0}, z), want), 1e-12) << z;
  }
  // 2F1(1/2,1;3/2;z^2) = atanh(z)/z.
  const Complex z{0.6, 0.5};
  EXPECT_LE(rel(hs::gauss_2f1({0.5, 1.0, 1.5}, z * z), std::atanh(z) / z), 1e-12);
}

TEST(Gauss2F1, Contiguity) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.1, 2.0);
  for (const Complex z : hs::testing::disk_points(20, 0.85, 5)) {
    const Complex a = u(rng), b = u(rng), c = b + u(rng);
    const Complex lhs = c * hs::gauss_2f1({a, b, c}, z) - c * hs::gauss_2f1({a, b + 1.0, c}, z) +
                        a * z * hs::gauss_2f1({a + 1.0, b + 1.0, c + 1.0}, z);
    EXPECT_LE(std::abs(lhs), 1e-10) << z;
  }
}

TEST(Gauss2F1, Errors) {
  EXPECT_THROW(hs::gauss_2f1({1.0, 1.0, -2.0}, 0.3), hs::ParamError);
  EXPECT_THROW(hs::gauss_2f1({1.0, 1.0, 0.0}, 0.3), hs::ParamError);
  EXPECT_THROW(hs::gauss_2f1_series({1.0, 1.0, 2.0}, 1.2), hs::DomainError);
  EXPECT_THROW(hs::gauss_2f1_euler({-1.0, -1.0, 2.0}, 0.3), hs::ParamError);
}

TEST(AppellF1, Trivial) {
  const hs::AppellF1Params p{0.4, 1.3, 0.7, 2.1};
  EXPECT_EQ(hs::appell_f1(p, 0.0, 0.0), Complex(1.0));
  EXPECT_NEAR(std::abs(hs::appell_f1_euler(p, 0.0, 0.0) - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(hs::appell_f1_euler({0.4, 0.0, 0.0, 2.1}, {0.5, 0.2}, {-0.3, 0.6}) - 1.0),
              0.0, 1e-12);
  EXPECT_NEAR(std::abs(hs::appell_f1({1.0, 1.0, 1.0, 2.0}, 0.5, 0.5) - 2.0), 0.0, 1e-12);
}

TEST(AppellF1, Reductions) {
  const hs::AppellF1Params p{0.6, 1.4, 0.0, 1.9};
  const Complex x{0.45, -0.2};
  const Complex y{-0.3, 0.5};
  EXPECT_LE(rel(hs::appell_f1(p, x, y), hs::gauss_2f1({p.a, p.b1, p.c}, x)), 1e-12);
  const hs::AppellF1Params q{0.6, 1.4, 0.8, 1.9};
  EXPECT_LE(rel(hs::appell_f1(q, x, x), hs::gauss_2f1({q.a, q.b1 + q.b2, q.c}, x)), 1e-12);
}

TEST(AppellF1, DualRoutePolygonParameters) {
  const double n = 4.0;
  const hs::AppellF1Params p{1.0 / n, 1.0 + 2.0 / n, 1.0, 1.0 + 1.0 / n};
  EXPECT_LE(std::abs(hs::appell_f1_series(p, 0.5, -0.5) - hs::appell_f1_euler(p, 0.5, -0.5)), 1e-10);
}

TEST(AppellF1, SymmetryAndRoutesOnRandomInputs) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::uniform_real_distribution<double> v(-1.5, 2.5);
  const auto xs = hs::testing::disk_points(40, 0.7, 17);
  const auto ys = hs::testing::disk_points(40, 0.7, 18);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double a = u(rng);
    const hs::AppellF1Params p{a, v(rng), v(rng), a + u(rng)};
    const Complex fwd = hs::appell_f1(p, xs[i], ys[i]);
    const Complex swapped = hs::appell_f1({p.a, p.b2, p.b1, p.c}, ys[i], xs[i]);
    EXPECT_LE(rel(fwd, swapped), 1e-12) << i;
    EXPECT_LE(rel(hs::appell_f1_series(p, xs[i], ys[i]), hs::appell_f1_euler(p, xs[i], ys[i])),
              1e-10)
        << i;
  }
}

TEST(AppellF1, BruteForceDoubleSeries) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.1, 1.5);
  const auto xs = hs::testing::disk_points(10, 0.5, 31);
  const auto ys = hs::testing::disk_points(10, 0.5, 32);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const hs::AppellF1Params p{u(rng), u(rng), u(rng), 1.0 + u(rng)};
    const Complex want = hs::testing::brute_f1(p.a, p.b1, p.b2, p.c, xs[i], ys[i]);
    EXPECT_LE(rel(hs::appell_f1(p, xs[i], ys[i]), want), 1e-12) << i;
  }
}

TEST(AppellF1, NearBidiskBoundary) {
  // Arguments (z^n, -z^n) at |z| = 0.98, n = 5 go through the Euler route.
  const hs::AppellF1Params p{0.2, 1.4, 1.0, 1.2};
  const Complex x = std::pow(Complex(0.98 * std::cos(0.3), 0.98 * std::sin(0.3)), 5);
  const Complex euler = hs::appell_f1(p, x, -x);
  hs::SpecfunConfig slow;
  slow.series_radius = 0.99;
  EXPECT_LE(rel(hs::appell_f1(p, x, -x, slow), euler), 1e-10);
}

TEST(AppellF1, Errors) {
  EXPECT_THROW(hs::appell_f1({0.5, 1.0, 1.0, -1.0}, 0.1, 0.1), hs::ParamError);
  EXPECT_THROW(hs::appell_f1_euler({2.0, 1.0, 1.0, 1.5}, 0.1, 0.1), hs::ParamError);
  EXPECT_THROW(hs::appell_f1_series({0.5, 1.0, 1.0, 1.5}, 1.1, 0.1), hs::DomainError);
}
