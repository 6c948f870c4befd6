#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "harmshear/minsurf.hpp"
#include "test_support.hpp"

namespace hs = harmshear;
using hs::Complex;

namespace {

hs::ConformalMapSpec ngon(int n) { return hs::ConformalMapSpec::regular_ngon(hs::NGonParams(n)); }

}  // namespace

TEST(PsiOracle, Basics) {
  const auto map = ngon(3);
  EXPECT_EQ(hs::psi_oracle(map, hs::MonomialDilatation(6), 0.0), Complex(0.0));
  EXPECT_EQ(hs::psi_oracle(map, hs::MonomialDilatation(0), Complex(0.4, 0.2)), Complex(0.0));
  EXPECT_THROW(hs::psi_oracle(map, hs::MonomialDilatation(3), 0.4), hs::NotLiftableError);
  EXPECT_THROW(hs::psi_oracle(map, hs::MonomialDilatation(2), 0.9995), hs::DomainError);
}

TEST(PsiOracle, AgreesWithIndependentQuadrature) {
  const auto map = ngon(4);
  const hs::MonomialDilatation dil(8);
  for (const Complex z : hs::testing::disk_points(5, 0.9, 14)) {
    const Complex want = hs::testing::romberg_segment(
        [&](Complex s) { return dil.q(s) * map.phi_prime(s) / (1.0 - dil.omega(s)); }, 0.0, z);
    EXPECT_LE(std::abs(hs::psi_oracle(map, dil, z) - want), 1e-12);
  }
}

TEST(PsiZ2n, Examples) {
  const hs::NGonParams p3(3);
  EXPECT_EQ(hs::psi_polygon_z2n(p3, 0.0), Complex(0.0));
  EXPECT_LE(std::abs(hs::psi_polygon_z2n(p3, 0.4) - hs::psi_oracle(ngon(3), hs::MonomialDilatation(6), 0.4)),
            1e-10);
  const Complex z = 0.1;
  EXPECT_LT(std::abs(hs::psi_polygon_z2n(hs::NGonParams(4), z) - std::pow(z, 5) / 5.0), 1e-8);
}

TEST(PsiZ2n, LiteralPrefactorIsWrong) {
  // Without the 1/(n+1) factor the lift is off by a factor n+1.
  const hs::NGonParams p3(3);
  const Complex z = 0.5;
  const Complex oracle = hs::psi_oracle(ngon(3), hs::MonomialDilatation(6), z);
  const Complex closed = hs::psi_polygon_z2n(p3, z);
  const Complex literal = 4.0 * closed;
  EXPECT_LE(std::abs(closed - oracle), 1e-9);
  EXPECT_GT(std::abs(literal - oracle) / std::abs(oracle), 0.1);
  EXPECT_NEAR(std::abs(literal - oracle) / std::abs(oracle), 3.0, 1e-8);
}

TEST(PsiZ2, Examples) {
  EXPECT_EQ(hs::psi_polygon_z2(hs::NGonParams(5), 0.0), Complex(0.0));
  EXPECT_LE(std::abs(hs::psi_polygon_z2(hs::NGonParams(3), 0.35) -
                     hs::psi_oracle(ngon(3), hs::MonomialDilatation(2), 0.35)),
            1e-10);
  const Complex z{0.2, 0.1};
  EXPECT_LE(std::abs(hs::psi_polygon_z2(hs::NGonParams(5), z) -
                     hs::psi_oracle(ngon(5), hs::MonomialDilatation(2), z)),
            1e-10);
  EXPECT_THROW(hs::psi_polygon_z2(hs::NGonParams(4), 0.2), hs::ParityError);
}

TEST(PsiClosedForm, LiftConsistency) {
  const auto pts = hs::testing::disk_points(20, 0.9, 23);
  for (int n : {3, 4, 5}) {
    for (const Complex z : pts) {
      const auto closed = hs::psi_closed_form(ngon(n), hs::MonomialDilatation(2 * n), z);
      ASSERT_TRUE(closed);
      EXPECT_LE(std::abs(*closed - hs::psi_oracle(ngon(n), hs::MonomialDilatation(2 * n), z)), 1e-9);
    }
  }
  for (int n : {3, 5, 7}) {
    for (const Complex z : pts) {
      const auto closed = hs::psi_closed_form(ngon(n), hs::MonomialDilatation(2), z);
      ASSERT_TRUE(closed);
      EXPECT_LE(std::abs(*closed - hs::psi_oracle(ngon(n), hs::MonomialDilatation(2), z)), 1e-9);
    }
  }
  EXPECT_FALSE(hs::psi_closed_form(ngon(4), hs::MonomialDilatation(2), 0.3));
  EXPECT_FALSE(hs::psi_closed_form(
      hs::ConformalMapSpec::four_slit(hs::SlitMapParams::from_c(1, 1, 0)), hs::MonomialDilatation(2), 0.3));
}

TEST(WeierstrassTriple, Examples) {
  const auto t0 = hs::weierstrass_triple(1.0, 0.0, 0.0);
  EXPECT_EQ(t0.phi1, Complex(1.0));
  EXPECT_EQ(t0.phi2, Complex(0.0, -1.0));
  EXPECT_EQ(t0.phi3, Complex(0.0));
  EXPECT_EQ(t0.isotropy(), Complex(0.0));

  const auto t1 = hs::weierstrass_triple(2.0, 0.5, 0.5);
  EXPECT_EQ(t1.phi1, Complex(2.5));
  EXPECT_EQ(t1.phi2, Complex(0.0, -1.5));
  EXPECT_EQ(t1.phi3, Complex(0.0, -2.0));
  EXPECT_EQ(t1.isotropy(), Complex(0.0));
}

TEST(WeierstrassTriple, RandomIsotropy) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 200; ++i) {
    const Complex hp{u(rng), u(rng)};
    const Complex q{u(rng), u(rng)};
    const auto t = hs::weierstrass_triple(hp, q * q * hp, q);
    EXPECT_LT(t.relative_isotropy_residual(), 1e-13);
  }
}

TEST(SurfacePoint, Basics) {
  const auto s = hs::surface_point(ngon(3), hs::MonomialDilatation(6), 0.0);
  EXPECT_EQ(s.u, 0.0);
  EXPECT_EQ(s.v, 0.0);
  EXPECT_EQ(s.w, 0.0);
  EXPECT_THROW(hs::surface_point(ngon(3), hs::MonomialDilatation(5), 0.2), hs::NotLiftableError);
}

TEST(SurfacePoint, MatchesAllOracleRoute) {
  const Complex z{0.0, 0.3};
  const auto a = hs::surface_point(ngon(3), hs::MonomialDilatation(6), z);
  const auto b = hs::surface_point_oracle(ngon(3), hs::MonomialDilatation(6), z);
  EXPECT_NEAR(a.u, b.u, 1e-9);
  EXPECT_NEAR(a.v, b.v, 1e-9);
  EXPECT_NEAR(a.w, b.w, 1e-9);
}

TEST(SurfacePoint, ProjectionAndIsothermality) {
  std::vector<std::pair<hs::ConformalMapSpec, int>> configs{
      {ngon(3), 6}, {ngon(4), 8}, {ngon(5), 2},
      {hs::ConformalMapSpec::four_slit(hs::SlitMapParams::from_c(1, 1, 0.4)), 4}};
  for (const auto& [map, m] : configs) {
    const hs::MonomialDilatation dil(m);
    for (const Complex z : hs::testing::disk_points(10, 0.9, 50 + m)) {
      const auto s = hs::surface_point(map, dil, z);
      const auto f = hs::shear_oracle(map, dil, z).f;
      EXPECT_LE(std::abs(Complex(s.u, s.v) - f), 1e-10);
      const auto shear = hs::shear_evaluate(map, dil, z);
      EXPECT_LT(hs::weierstrass_triple(shear.h_prime, shear.g_prime, dil.q(z)).relative_isotropy_residual(),
                1e-12);
    }
  }
}

TEST(SurfacePoint, RealAxisHasZeroHeight) {
  for (const auto& [n, m] : std::vector<std::pair<int, int>>{{3, 6}, {4, 8}, {3, 2}, {7, 2}}) {
    for (double x : {-0.95, -0.5, 0.25, 0.9}) {
      EXPECT_NEAR(hs::surface_point(ngon(n), hs::MonomialDilatation(m), x).w, 0.0, 1e-14) << n << ' ' << m;
    }
  }
}
