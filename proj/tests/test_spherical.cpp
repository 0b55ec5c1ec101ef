#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "monoball/integrate.hpp"
#include "monoball/spherical.hpp"

using namespace monoball;
constexpr double kPi = std::numbers::pi;

namespace {

Poly3 x(int i) { return Poly3::coordinate(i); }

SphericalPoint random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return {std::acos(1.0 - 2.0 * u(rng)), 2.0 * kPi * u(rng)};
}

}  // namespace

TEST(SolidHarmonic, Examples) {
  EXPECT_EQ(solid_harmonic(1, 0, HarmonicKind::U), x(0));
  EXPECT_EQ(solid_harmonic(2, 0, HarmonicKind::U), x(0) * x(0) - Rational(1, 2) * (x(1) * x(1) + x(2) * x(2)));
  EXPECT_EQ(solid_harmonic(1, 1, HarmonicKind::V), x(2));
  EXPECT_EQ(solid_harmonic(1, 1, HarmonicKind::U), x(1));
  EXPECT_THROW(solid_harmonic(2, 3, HarmonicKind::U), std::invalid_argument);
  EXPECT_THROW(solid_harmonic(2, 0, HarmonicKind::V), std::invalid_argument);
}

TEST(SolidHarmonic, MatchesStandardLibraryLegendre) {
  // std::assoc_legendre has no Condon-Shortley phase, same as here
  std::mt19937_64 rng(17);
  for (int N = 0; N <= 9; ++N)
    for (int m = 0; m <= N; ++m) {
      const Poly3 u = solid_harmonic(N, m, HarmonicKind::U);
      const Poly3 v = m > 0 ? solid_harmonic(N, m, HarmonicKind::V) : Poly3();
      EXPECT_TRUE(u.is_homogeneous(N));
      EXPECT_TRUE(u.laplacian().is_zero());
      EXPECT_TRUE(v.laplacian().is_zero());
      for (int k = 0; k < 10; ++k) {
        const auto p = random_point(rng);
        const double leg = std::assoc_legendre(static_cast<unsigned>(N), static_cast<unsigned>(m), std::cos(p.theta));
        const auto w = p.to_cartesian();
        EXPECT_NEAR(u.eval(w), leg * std::cos(m * p.phi), 1e-10 * (1 + std::abs(leg)));
        if (m > 0) EXPECT_NEAR(v.eval(w), leg * std::sin(m * p.phi), 1e-10 * (1 + std::abs(leg)));
      }
    }
}

TEST(SolidHarmonic, SpaceDimensionAndOrthogonality) {
  for (int n = 0; n <= 7; ++n) {
    std::vector<Poly3> basis{solid_harmonic(n, 0, HarmonicKind::U)};
    for (int m = 1; m <= n; ++m) {
      basis.push_back(solid_harmonic(n, m, HarmonicKind::U));
      basis.push_back(solid_harmonic(n, m, HarmonicKind::V));
    }
    ASSERT_EQ(basis.size(), static_cast<std::size_t>(2 * n + 1));
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const auto ip = inner_product_exact(basis[i], basis[j]).coeff;
        if (i == j)
          EXPECT_GT(ip, 0);
        else
          EXPECT_EQ(ip, 0);
      }
    if (n > 0)
      EXPECT_EQ(inner_product_exact(basis[0], solid_harmonic(n - 1, 0, HarmonicKind::U)).coeff, 0);
  }
}

TEST(SphericalMonogenic, Examples) {
  const auto x00 = spherical_monogenic(0, 0, MonogenicKind::X0);
  EXPECT_EQ(x00.solid(), QPolynomial::constant({Rational(1, 2), 0, 0, 0}));
  const auto x10 = spherical_monogenic(1, 0, MonogenicKind::X0);
  EXPECT_EQ(x10.solid(), QPolynomial(x(0), Rational(1, 2) * x(1), Rational(1, 2) * x(2), Poly3()));
  const auto t = x00.trig_coefficients(0.3);
  EXPECT_DOUBLE_EQ(t.a, 0.5);
  EXPECT_DOUBLE_EQ(t.b, 0.0);
  EXPECT_THROW(spherical_monogenic(2, 4, MonogenicKind::X), std::invalid_argument);
  EXPECT_THROW(spherical_monogenic(2, 0, MonogenicKind::Y), std::invalid_argument);
  EXPECT_THROW(spherical_monogenic(-1, 0, MonogenicKind::X0), std::invalid_argument);
}

TEST(SphericalMonogenic, FamilyIsMonogenicHomogeneousAndReduced) {
  for (int n = 0; n <= 10; ++n) {
    const auto family = monogenic_family(n);
    ASSERT_EQ(family.size(), static_cast<std::size_t>(2 * n + 3));
    for (const auto& e : family) {
      EXPECT_TRUE(apply_D(e.solid()).is_zero()) << n << "," << e.order();
      EXPECT_TRUE(e.solid().is_homogeneous(n));
      EXPECT_FALSE(e.solid().is_zero());
      EXPECT_TRUE(e.solid().component(3).is_zero());
    }
  }
}

TEST(SphericalMonogenic, RealPartIsScaledHarmonic) {
  // Re X^m_n = (n+m+1)/2 * r^n P^m_n(cos theta) cos(m phi), vanishing for m = n+1
  for (int n = 0; n <= 8; ++n)
    for (int m = 0; m <= n + 1; ++m)
      for (auto kind : {MonogenicKind::X, MonogenicKind::Y}) {
        if (m == 0 && kind == MonogenicKind::Y) continue;
        const auto e = spherical_monogenic(n, m, m == 0 ? MonogenicKind::X0 : kind);
        const Poly3 expected = m > n ? Poly3()
                                     : solid_harmonic(n, m, kind == MonogenicKind::Y ? HarmonicKind::V : HarmonicKind::U) *
                                           make_rational(n + m + 1, 2);
        EXPECT_EQ(e.solid().component(0), expected) << n << "," << m;
      }
}

TEST(SphericalMonogenic, TrigFormMatchesPolynomial) {
  std::mt19937_64 rng(3);
  for (int n = 0; n <= 8; ++n)
    for (const auto& e : monogenic_family(n)) {
      const CompiledQPolynomial poly(e.solid());
      const double scale = std::max(1.0, pointwise_bound(n, e.order(), e.kind()));
      double worst = 0.0;
      for (int k = 0; k < 1000; ++k) {
        const auto p = random_point(rng);
        const auto a = e.eval_trig(p);
        const auto b = poly.eval(p.to_cartesian());
        for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(a.component(i) - b.component(i)));
      }
      EXPECT_LE(worst, 1e-12 * scale) << n << "," << e.order();
      if (n <= 3) EXPECT_LE(worst, 1e-12);
    }
}

TEST(SphericalMonogenic, TrigFormIsFiniteAtPoles) {
  for (int n = 0; n <= 6; ++n)
    for (const auto& e : monogenic_family(n)) {
      const CompiledQPolynomial poly(e.solid());
      for (double theta : {0.0, kPi})
        for (double phi : {0.0, 1.1, 4.0}) {
          const SphericalPoint p{theta, phi};
          const auto a = e.eval_trig(p);
          const auto b = poly.eval(p.to_cartesian());
          for (int i = 0; i < 4; ++i) {
            ASSERT_TRUE(std::isfinite(a.component(i)));
            EXPECT_NEAR(a.component(i), b.component(i), 1e-12 * std::max(1.0, pointwise_bound(n, e.order(), e.kind())));
          }
        }
    }
}

TEST(PointwiseBound, Examples) {
  const auto x00 = spherical_monogenic(0, 0, MonogenicKind::X0);
  EXPECT_NEAR(pointwise_bound(0, 0, MonogenicKind::X0), std::sqrt(kPi / 3), 1e-15);
  const auto r0 = pointwise_bound_check(x00, sphere_grid(8, 8));
  EXPECT_TRUE(r0.holds());
  EXPECT_DOUBLE_EQ(r0.max_value, 0.5);
  const auto r1 = pointwise_bound_check(spherical_monogenic(1, 0, MonogenicKind::X0), sphere_grid(64, 128));
  EXPECT_TRUE(r1.holds());
  EXPECT_GT(r1.worst_margin, 0.0);
}

TEST(PointwiseBound, HoldsForAllElements) {
  const auto grid = sphere_grid(48, 96);
  for (int n = 0; n <= 8; ++n)
    for (const auto& e : monogenic_family(n)) EXPECT_TRUE(pointwise_bound_check(e, grid).holds()) << n;
}

TEST(SphericalPoint, RoundTrip) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    const auto p = random_point(rng);
    const SphericalPoint scaled{p.theta, p.phi, 0.3};
    const auto back = SphericalPoint::from_cartesian(scaled.to_cartesian());
    EXPECT_NEAR(back.r, 0.3, 1e-15);
    EXPECT_NEAR(back.theta, p.theta, 1e-12);
    EXPECT_NEAR(std::cos(back.phi), std::cos(p.phi), 1e-12);
    EXPECT_NEAR(std::sin(back.phi), std::sin(p.phi), 1e-12);
  }
  EXPECT_THROW(SphericalPoint::from_cartesian({0, 0, 0}), std::domain_error);
}

TEST(BasisIndex, Names) {
  for (auto k : {MonogenicKind::X0, MonogenicKind::X, MonogenicKind::Y})
    EXPECT_EQ(monogenic_kind_from_string(to_string(k)), k);
  EXPECT_THROW(monogenic_kind_from_string("Z"), std::invalid_argument);
  const auto idx = family_indices(2);
  ASSERT_EQ(idx.size(), 7u);
  EXPECT_EQ(idx[0].kind, MonogenicKind::X0);
  EXPECT_EQ(idx[5].kind, MonogenicKind::X);
  EXPECT_EQ(idx[5].m, 3);
  EXPECT_EQ(idx[6].kind, MonogenicKind::Y);
}
