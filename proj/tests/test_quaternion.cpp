#include <gtest/gtest.h>

#include "monoball/quaternion.hpp"
#include "support.hpp"

using namespace monoball;
using Q = Quaternion<Rational>;

namespace {

Q unit(int i) { return Q::unit(i); }

// e_i e_j written out by hand for the basis units 1, e1, e2, e3
struct Entry {
  int sign;
  int unit;
};
constexpr Entry kTable[4][4] = {
    {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
    {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
    {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
    {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
};

}  // namespace

TEST(Quaternion, UnitProducts) {
  EXPECT_EQ(unit(1) * unit(2), unit(3));
  EXPECT_EQ(unit(1) * unit(1), Q(-1, 0, 0, 0));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      EXPECT_EQ(unit(i) * unit(j), unit(kTable[i][j].unit) * Rational(kTable[i][j].sign)) << i << "," << j;
}

TEST(Quaternion, AntiCommutator) {
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) EXPECT_EQ(unit(i) * unit(j) + unit(j) * unit(i), Q(i == j ? -2 : 0, 0, 0, 0));
}

TEST(Quaternion, IdentityElement) {
  testing_support::RandomRationals rng(7);
  for (int k = 0; k < 20; ++k) {
    const auto a = rng.quaternion();
    EXPECT_EQ(unit(0) * a, a);
    EXPECT_EQ(a * unit(0), a);
  }
}

TEST(Quaternion, Conjugate) {
  EXPECT_EQ(conj(Q(1, 1, 0, 0)), Q(1, -1, 0, 0));
  EXPECT_EQ(conj(unit(3)), Q(0, 0, 0, -1));
  const Q a(1, 1, 1, 1);
  EXPECT_EQ(a * conj(a), Q(4, 0, 0, 0));
}

TEST(Quaternion, NormAndParts) {
  EXPECT_DOUBLE_EQ(norm(unit(2)), 1.0);
  EXPECT_DOUBLE_EQ(norm(Q(1, 1, 1, 1)), 2.0);
  EXPECT_EQ(re(Q(3, 1, 0, 0)), Rational(3));
  EXPECT_EQ(vec(Q(3, 1, 0, 0)), unit(1));
  const Q a(5, -2, 7, 1);
  EXPECT_EQ(Q(re(a)) + vec(a), a);
}

TEST(Quaternion, RandomProperties) {
  testing_support::RandomRationals rng(2024);
  for (int k = 0; k < 100; ++k) {
    const auto a = rng.quaternion();
    const auto b = rng.quaternion();
    const auto c = rng.quaternion();
    EXPECT_EQ(norm_sq(a * b), norm_sq(a) * norm_sq(b));
    EXPECT_EQ(conj(conj(a)), a);
    EXPECT_EQ(conj(a * b), conj(b) * conj(a));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * conj(a), Q(norm_sq(a)));
    for (int i = 0; i < 4; ++i) {
      EXPECT_EQ(mul_unit_left(i, a), unit(i) * a);
      EXPECT_EQ(mul_unit_right(a, i), a * unit(i));
    }
  }
}

TEST(Quaternion, NotCommutative) { EXPECT_NE(unit(1) * unit(2), unit(2) * unit(1)); }

TEST(Quaternion, DoubleBackendMatchesExact) {
  testing_support::RandomRationals rng(5);
  for (int k = 0; k < 50; ++k) {
    const auto a = rng.quaternion();
    const auto b = rng.quaternion();
    const auto exact = to_double(a * b);
    const auto approx = to_double(a) * to_double(b);
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(exact.component(i), approx.component(i), 1e-13);
  }
}

TEST(ReducedQuaternion, EmbeddingIsNormPreserving) {
  testing_support::RandomRationals rng(11);
  for (int k = 0; k < 50; ++k) {
    const ReducedQuaternion<Rational> x(rng.next(), rng.next(), rng.next());
    const auto q = x.embed();
    EXPECT_EQ(q.a3, 0);
    EXPECT_EQ(norm_sq(q), x.x0 * x.x0 + x.x1 * x.x1 + x.x2 * x.x2);
    EXPECT_EQ(ReducedQuaternion<Rational>::from(q), x);
  }
}

TEST(ReducedQuaternion, ProductLeavesTheSubspace) {
  const ReducedQuaternion<Rational> e1(0, 1, 0), e2(0, 0, 1);
  const Q product = e1 * e2;
  EXPECT_EQ(product, unit(3));
  EXPECT_THROW(ReducedQuaternion<Rational>::from(product), std::domain_error);
}

TEST(Quaternion, ComponentIndexChecked) {
  Q a;
  EXPECT_THROW(a.component(4), std::out_of_range);
  EXPECT_THROW(mul_unit_left(-1, a), std::out_of_range);
  EXPECT_THROW(mul_unit_right(a, 5), std::out_of_range);
}
