#pragma once

/**
 * Orthonormal expansion of A-valued monogenic polynomials.
 *
 * For each degree n the 2n+3 spherical monogenics are normalized in the
 * real L2(S) inner product. With the radial weight sqrt(2n+3) the family
 * { sqrt(2n+3) r^n X^* } is orthonormal in L2(B), and an A-valued monogenic
 * polynomial of degree <= N expands as
 *
 *   f = f(0) + sum_{n=1}^{N} sqrt(2n+3) r^n ( X^{0,*}_n alpha^0_n
 *         + sum_{m=1}^{n+1} [ X^{m,*}_n alpha^m_n + Y^{m,*}_n beta^m_n ] )
 *
 * with real coefficients. The m <= n terms (with m = 0) form f1, the
 * m = n+1 terms form f2. Degree 0 is carried by f(0).
 *
 * Two extraction routes are provided: direct orthogonal projection of f,
 * and recovery from boundary samples of Re(f) and Re(f e1) alone.
 */

#include <optional>
#include <vector>

#include "monoball/integrate.hpp"
#include "monoball/poly3.hpp"
#include "monoball/spherical.hpp"

namespace monoball {

/**
 * Exact value num / sqrt(radicand), radicand > 0. Gram entries of
 * normalized elements have this form once the common factor of pi cancels.
 */
struct ScaledSqrt {
  Rational num;
  Rational radicand;

  bool is_zero() const { return num == 0; }
  bool is_one() const { return num > 0 && num * num == radicand; }
  double value() const;
};

/// Per-degree data for the normalized family.
struct DegreeBlock {
  int n = 0;
  std::vector<MonogenicBasisElement> elements;  // family order, see family_indices
  std::vector<ExactSphereValue> norm_sq;        // ||X||^2 on S
  std::vector<ExactSphereValue> re_norm_sq;     // ||Re X||^2 on S (0 for m = n+1)
  std::vector<ExactSphereValue> re_e1_norm_sq;  // ||Re(X e1)||^2 on S
  /// e1_gram[i][j] = <Re(X_i e1), Re(X_j e1)> on S, exact. Not diagonal: the
  /// m = n-1 elements overlap the m = n+1 ones.
  std::vector<std::vector<ExactSphereValue>> e1_gram;

  /// sqrt(2n+3)
  double ball_weight() const;
  /// Position of (kind, m) within the block.
  std::size_t position(MonogenicKind kind, int m) const;
  /// True for the f2 elements (m = n+1).
  bool is_f2(std::size_t k) const { return elements[k].order() == n + 1; }
};

class NormalizedBasis {
 public:
  explicit NormalizedBasis(std::vector<DegreeBlock> blocks) : blocks_(std::move(blocks)) {}

  int max_degree() const { return static_cast<int>(blocks_.size()) - 1; }
  const DegreeBlock& block(int n) const { return blocks_.at(static_cast<std::size_t>(n)); }

  /// 1 / ||X||_{L2(S)} for element k of degree n.
  double inv_norm(int n, std::size_t k) const;

 private:
  std::vector<DegreeBlock> blocks_;
};

NormalizedBasis normalize_basis(int max_degree);

/// Gram matrix of {X^*} of degree n in L2(S).
std::vector<std::vector<ScaledSqrt>> gram_sphere(const NormalizedBasis& basis, int n);
/// Gram matrix of {sqrt(2n+3) r^n X^*} of degree n in L2(B).
std::vector<std::vector<ScaledSqrt>> gram_ball(const NormalizedBasis& basis, int n);
/// L2(S) Gram block between two degrees (exact).
std::vector<std::vector<ExactSphereValue>> cross_gram_sphere(const NormalizedBasis& basis, int n, int k);

bool is_identity(const std::vector<std::vector<ScaledSqrt>>& g);

// ---------------------------------------------------------------------------
// Closed forms for the norms

/// ||X||^2 on S: pi (n+1) for X0, (pi/2)(n+1)(n+1+m)!/(n+1-m)! for X, Y.
ExactSphereValue closed_form_norm_sq(const BasisIndex& idx);
/// ||Re X||^2 on S: pi (n+1)^2/(2n+1) for X0, (pi/2)((n+1+m)/(2n+1))(n+1+m)!/(n-m)! for m <= n,
/// zero for m = n+1.
ExactSphereValue closed_form_re_norm_sq(const BasisIndex& idx);
/// ||Re(X^{n+1}_n e1)||^2 = ||Re(Y^{n+1}_n e1)||^2 = (pi/4)(n+1)(2n+2)!.
ExactSphereValue closed_form_re_e1_norm_sq(int n);

// ---------------------------------------------------------------------------
// Coefficients

struct FourierCoefficients {
  ReducedQuaternion<double> f0;
  int max_degree = 0;
  /// values[n][k] for n in 1..max_degree, k in family order; values[0] is empty.
  std::vector<std::vector<double>> values;

  static FourierCoefficients zeros(int max_degree);
  double& at(const BasisIndex& idx);
  double at(const BasisIndex& idx) const;
  double alpha(int n, int m) const { return at({n, m == 0 ? MonogenicKind::X0 : MonogenicKind::X, m}); }
  double beta(int n, int m) const { return at({n, MonogenicKind::Y, m}); }
};

/// Coefficients on the unnormalized elements: f = f(0) + sum gamma X (exact).
struct RawCoefficients {
  ReducedQuaternion<Rational> f0;
  int max_degree = 0;
  std::vector<std::vector<Rational>> values;

  static RawCoefficients zeros(int max_degree);
};

/// alpha = gamma ||X|| / sqrt(2n+3)
FourierCoefficients to_normalized(const RawCoefficients& raw, const NormalizedBasis& basis);

QPolynomial synthesize(const RawCoefficients& coeffs, const NormalizedBasis& basis);
/// The double coefficients are converted to exact rationals, so the result
/// is exactly monogenic.
QPolynomial synthesize(const FourierCoefficients& coeffs, const NormalizedBasis& basis);

struct ProjectionResult {
  RawCoefficients raw;
  FourierCoefficients coeffs;
  QPolynomial residual;             // f - synthesize(raw)
  ExactSphereValue residual_ball_sq;  // ||residual||^2 in L2(B); zero iff residual == 0
  bool exact() const { return residual.is_zero(); }
};

/// Orthogonal projection of f onto the basis, degree by degree. Throws
/// std::invalid_argument if f has degree above the basis or is not A-valued.
ProjectionResult project(const QPolynomial& f, const NormalizedBasis& basis);

/// Projection with quadrature inner products on S.
FourierCoefficients project_quad(const BoundarySampler& f, const NormalizedBasis& basis,
                                 const QuadratureRule& rule);

/**
 * Recovers the coefficients from samples of Re(f) and Re(f e1) on the rule
 * nodes. The m <= n coefficients come from Re(f):
 *
 *   sqrt(2n+3) alpha = ||X|| / ||Re X||^2 * int_S Re(f) Re(X) dsigma
 *
 * The m = n+1 ones come from Re(f e1) after removing the contribution of the
 * already recovered m <= n terms of the same degree, which is not orthogonal
 * to Re(X^{n+1} e1):
 *
 *   sqrt(2n+3) alpha^{n+1}_n = ||X|| / ||Re(X e1)||^2
 *       * ( int_S Re(f e1) Re(X e1) dsigma - sum_j gamma_j <Re(X_j e1), Re(X e1)> )
 *
 * with gamma_j the raw coefficients of the m <= n elements. Scalar and e1
 * parts of f(0) are the sphere means of Re(f) and -Re(f e1). The e2 part of
 * f(0) is invisible to both samples and is taken from `f0_e2` (default 0).
 */
FourierCoefficients coeffs_from_real_part(const SphereSamples& re_f, const SphereSamples& re_fe1,
                                          const NormalizedBasis& basis, const QuadratureRule& rule,
                                          double f0_e2 = 0.0);

/// Same, but the m = n+1 coefficients use the projection of Re(f e1) alone,
/// without the overlap correction. Exact only when f has no m = n-1 terms.
FourierCoefficients coeffs_from_real_part_uncorrected(const SphereSamples& re_f, const SphereSamples& re_fe1,
                                                      const NormalizedBasis& basis, const QuadratureRule& rule,
                                                      double f0_e2 = 0.0);

/// Re(f) and Re(f e1) sampled at the nodes of a rule.
std::pair<SphereSamples, SphereSamples> real_part_samples(const QPolynomial& f, const QuadratureRule& rule);

/// Largest absolute difference over f0 and all coefficients.
double max_abs_difference(const FourierCoefficients& a, const FourierCoefficients& b);

}  // namespace monoball
