#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "monoball/bounds.hpp"
#include "monoball/fourier.hpp"
#include "support.hpp"

using namespace monoball;
using testing_support::fact;
constexpr double kPi = std::numbers::pi;

namespace {

const NormalizedBasis& basis() {
  static const NormalizedBasis b = normalize_basis(8);
  return b;
}

// Independent closed forms, as multiples of pi.
Rational norm_sq_oracle(int n, int m, MonogenicKind kind) {
  if (kind == MonogenicKind::X0) return n + 1;
  return make_rational(n + 1, 2) * fact(n + 1 + m) / fact(n + 1 - m);
}

Rational re_norm_sq_oracle(int n, int m, MonogenicKind kind) {
  if (kind == MonogenicKind::X0) return Rational((n + 1) * (n + 1)) / Rational(2 * n + 1);
  if (m == n + 1) return 0;
  return Rational(1, 2) * Rational(n + 1 + m) / Rational(2 * n + 1) * fact(n + 1 + m) / fact(n - m);
}

FourierCoefficients random_coeffs(UniformSource& rng, int degree) {
  RandomMonogenicOptions opts;
  opts.max_degree = degree;
  return random_coefficients(rng, opts);
}

double recovery_error(const QPolynomial& f, bool corrected, double f0_e2) {
  const int degree = std::max(f.degree(), 1);
  const auto rule = QuadratureRule::for_degree(degree);
  auto [re_f, re_fe1] = real_part_samples(f, rule);
  re_f.degree = re_fe1.degree = degree;
  const auto got = corrected ? coeffs_from_real_part(re_f, re_fe1, basis(), rule, f0_e2)
                             : coeffs_from_real_part_uncorrected(re_f, re_fe1, basis(), rule, f0_e2);
  return max_abs_difference(got, project(f, basis()).coeffs);
}

}  // namespace

TEST(NormalizedBasis, NormsMatchClosedForms) {
  for (int n = 0; n <= 8; ++n) {
    const auto& b = basis().block(n);
    ASSERT_EQ(b.elements.size(), static_cast<std::size_t>(2 * n + 3));
    for (std::size_t k = 0; k < b.elements.size(); ++k) {
      const auto& idx = b.elements[k].index();
      EXPECT_EQ(b.norm_sq[k].coeff, norm_sq_oracle(n, idx.m, idx.kind));
      EXPECT_EQ(b.re_norm_sq[k].coeff, re_norm_sq_oracle(n, idx.m, idx.kind));
      EXPECT_EQ(closed_form_norm_sq(idx).coeff, norm_sq_oracle(n, idx.m, idx.kind));
      EXPECT_EQ(closed_form_re_norm_sq(idx).coeff, re_norm_sq_oracle(n, idx.m, idx.kind));
    }
  }
}

TEST(NormalizedBasis, TwistedNormsOfTopOrder) {
  for (int n = 1; n <= 8; ++n) {
    const auto& b = basis().block(n);
    const auto x = b.position(MonogenicKind::X, n + 1);
    const auto y = b.position(MonogenicKind::Y, n + 1);
    const Rational oracle = make_rational(n + 1, 4) * fact(2 * n + 2);
    EXPECT_EQ(b.re_e1_norm_sq[x].coeff, oracle);
    EXPECT_EQ(b.re_e1_norm_sq[y].coeff, oracle);
    EXPECT_EQ(b.e1_gram[x][y].coeff, 0);
  }
  // degree 0: the top-order pair is e1 and e2 times 1/2, so the twisted norms
  // are pi and 0 instead of the pi/2 the general formula gives
  const auto& b0 = basis().block(0);
  EXPECT_EQ(b0.re_e1_norm_sq[b0.position(MonogenicKind::X, 1)].coeff, 1);
  EXPECT_EQ(b0.re_e1_norm_sq[b0.position(MonogenicKind::Y, 1)].coeff, 0);
  EXPECT_EQ(closed_form_re_e1_norm_sq(0).coeff, Rational(1, 2));
}

TEST(NormalizedBasis, TwistedOverlapOnlyAtOrderNMinusOne) {
  for (int n = 1; n <= 8; ++n) {
    const auto& b = basis().block(n);
    for (std::size_t i = 0; i < b.elements.size(); ++i) {
      if (b.is_f2(i)) continue;
      for (std::size_t k = 0; k < b.elements.size(); ++k) {
        if (!b.is_f2(k)) continue;
        const bool same_parity = (b.elements[i].kind() == MonogenicKind::Y) == (b.elements[k].kind() == MonogenicKind::Y);
        const bool expect_nonzero = b.elements[i].order() == n - 1 && same_parity;
        EXPECT_EQ(b.e1_gram[i][k].coeff != 0, expect_nonzero) << n << "," << i << "," << k;
      }
    }
  }
}

TEST(NormalizedBasis, GramIdentity) {
  for (int n = 0; n <= 6; ++n) {
    EXPECT_TRUE(is_identity(gram_sphere(basis(), n)));
    EXPECT_TRUE(is_identity(gram_ball(basis(), n)));
  }
  const auto g3 = gram_ball(basis(), 3);
  EXPECT_EQ(g3.size(), 9u);
  for (int n = 0; n <= 5; ++n)
    for (int k = n + 1; k <= 5; ++k)
      for (const auto& row : cross_gram_sphere(basis(), n, k))
        for (const auto& v : row) EXPECT_EQ(v.coeff, 0);
}

TEST(NormalizedBasis, SmallestElements) {
  EXPECT_NEAR(basis().inv_norm(0, 0) * 0.5, 0.5 / std::sqrt(kPi), 1e-15);
  // ||sqrt(5) r X_1^{0,*}||_{L2(B)} = 1
  const auto g = gram_ball(basis(), 1);
  EXPECT_TRUE(g[0][0].is_one());
  EXPECT_NEAR(g[0][0].value(), 1.0, 1e-15);
  EXPECT_THROW(normalize_basis(-1), std::invalid_argument);
}

TEST(ScaledSqrt, Predicates) {
  EXPECT_TRUE((ScaledSqrt{3, 9}).is_one());
  EXPECT_FALSE((ScaledSqrt{-3, 9}).is_one());
  EXPECT_TRUE((ScaledSqrt{0, 5}).is_zero());
  EXPECT_NEAR((ScaledSqrt{1, 4}).value(), 0.5, 1e-16);
}

TEST(Synthesize, Constants) {
  auto c = FourierCoefficients::zeros(3);
  c.f0 = {0.5, -2.0, 0.25};
  EXPECT_EQ(synthesize(c, basis()), QPolynomial::constant({Rational(1, 2), -2, Rational(1, 4), 0}));
}

TEST(Synthesize, SingleTerm) {
  auto c = FourierCoefficients::zeros(1);
  c.at({1, MonogenicKind::X0, 0}) = 1.0;
  const auto f = synthesize(c, basis());
  // sqrt(5) r X_1^0 / ||X_1^0||, ||X_1^0||^2 = 2 pi
  const auto expected = CompiledQPolynomial(basis().block(1).elements[0].solid());
  const Point3 p(0.3, -0.2, 0.5);
  const double scale = std::sqrt(5.0 / (2 * kPi));
  const auto got = CompiledQPolynomial(f).eval(p);
  const auto want = expected.eval(p);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(got.component(i), scale * want.component(i), 1e-14);
  EXPECT_TRUE(is_monogenic(f));
}

TEST(Synthesize, AlwaysMonogenic) {
  UniformSource rng(1);
  for (int t = 0; t < 10; ++t) EXPECT_TRUE(is_monogenic(synthesize(random_coeffs(rng, 6), basis())));
  EXPECT_THROW(synthesize(FourierCoefficients::zeros(9), basis()), std::invalid_argument);
}

TEST(Project, RoundTrip) {
  UniformSource rng(2);
  for (int t = 0; t < 50; ++t) {
    const auto c = random_coeffs(rng, 6);
    const auto f = synthesize(c, basis());
    const auto p = project(f, basis());
    EXPECT_TRUE(p.exact());
    EXPECT_EQ(p.residual_ball_sq.coeff, 0);
    EXPECT_LE(max_abs_difference(p.coeffs, c), 1e-14);
  }
}

TEST(Project, SimpleInputs) {
  const auto c = project(QPolynomial::constant({3, -1, 2, 0}), basis());
  EXPECT_EQ(c.raw.f0, ReducedQuaternion<Rational>(3, -1, 2));
  EXPECT_EQ(c.coeffs.max_degree, 0);

  auto one = FourierCoefficients::zeros(1);
  one.at({1, MonogenicKind::X0, 0}) = 1.0;
  const auto p = project(synthesize(one, basis()), basis());
  EXPECT_NEAR(p.coeffs.alpha(1, 0), 1.0, 1e-15);

  QPolynomial bad;
  bad.component(3) = Poly3::coordinate(0);
  EXPECT_THROW(project(bad, basis()), std::invalid_argument);
  EXPECT_THROW(project(QPolynomial(pow(Poly3::coordinate(0), 9)), basis()), std::invalid_argument);
}

TEST(Project, NonMonogenicInputLeavesResidual) {
  const auto p = project(QPolynomial(Poly3::coordinate(1)), basis());
  EXPECT_FALSE(p.exact());
  EXPECT_GT(p.residual_ball_sq.coeff, 0);
}

TEST(Project, QuadratureMatchesExact) {
  UniformSource rng(3);
  for (int t = 0; t < 10; ++t) {
    const auto c = random_coeffs(rng, 5);
    const auto f = synthesize(c, basis());
    const auto q = project_quad(make_sampler(f), basis(), QuadratureRule::for_degree(5));
    EXPECT_LE(max_abs_difference(q, c), 1e-12);
  }
}

TEST(RealPartRecovery, Examples) {
  auto one = FourierCoefficients::zeros(1);
  one.at({1, MonogenicKind::X0, 0}) = 1.0;
  EXPECT_LE(recovery_error(synthesize(one, basis()), true, 0.0), 1e-10);

  auto top = FourierCoefficients::zeros(2);
  top.at({2, MonogenicKind::X, 3}) = 1.0;
  const auto f_top = synthesize(top, basis());
  EXPECT_TRUE(f_top.component(0).is_zero());  // Re f vanishes, Re(f e1) carries everything
  EXPECT_LE(recovery_error(f_top, true, 0.0), 1e-10);

  const auto constant = QPolynomial::constant({2, 1, 0, 0});
  EXPECT_LE(recovery_error(constant, true, 0.0), 1e-12);
  // e2 part of f(0) comes from the caller
  EXPECT_LE(recovery_error(QPolynomial::constant({2, 1, Rational(3, 4), 0}), true, 0.75), 1e-12);
}

TEST(RealPartRecovery, RandomPolynomials) {
  UniformSource rng(4);
  for (int t = 0; t < 50; ++t) {
    auto c = random_coeffs(rng, 6);
    const double e2 = c.f0.x2;
    EXPECT_LE(recovery_error(synthesize(c, basis()), true, e2), 1e-9) << "trial " << t;
  }
}

TEST(RealPartRecovery, UncorrectedFormulaNeedsNoOrderNMinusOneTerms) {
  // alpha^{n-1}_n and alpha^{n+1}_n together: the direct formula misreads the top-order coefficient
  auto c = FourierCoefficients::zeros(3);
  c.at({3, MonogenicKind::X, 2}) = 1.0;
  c.at({3, MonogenicKind::X, 4}) = 0.5;
  const auto f = synthesize(c, basis());
  EXPECT_LE(recovery_error(f, true, 0.0), 1e-10);
  EXPECT_GT(recovery_error(f, false, 0.0), 1e-2);

  // without the order n-1 term both agree
  auto d = FourierCoefficients::zeros(3);
  d.at({3, MonogenicKind::X, 1}) = 1.0;
  d.at({3, MonogenicKind::Y, 4}) = -0.5;
  const auto g = synthesize(d, basis());
  EXPECT_LE(recovery_error(g, false, 0.0), 1e-10);
}

TEST(RealPartRecovery, RejectsCoarseRules) {
  const QuadratureRule rule(2, 4);
  const SphereSamples s{std::vector<double>(rule.size(), 0.0), 4};
  EXPECT_THROW(coeffs_from_real_part(s, s, basis(), rule), std::domain_error);
}

TEST(FourierCoefficients, Indexing) {
  auto c = FourierCoefficients::zeros(2);
  c.at({2, MonogenicKind::Y, 3}) = 4.0;
  EXPECT_EQ(c.beta(2, 3), 4.0);
  EXPECT_EQ(c.values[2][6], 4.0);
  EXPECT_THROW(c.at({3, MonogenicKind::X0, 0}), std::out_of_range);
  EXPECT_THROW(c.at({2, MonogenicKind::X, 4}), std::out_of_range);
  EXPECT_THROW(c.at({0, MonogenicKind::X0, 0}), std::out_of_range);
}
