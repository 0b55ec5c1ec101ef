#pragma once

/**
 * Integration over the unit sphere S^2 and the unit ball.
 *
 * The exact path integrates polynomials term by term against the closed
 * form for sphere monomials; results are rational multiples of pi and are
 * carried as `ExactSphereValue`. The numerical path is a product rule:
 * Gauss-Legendre in t = cos(theta) times the equispaced trapezoid rule in
 * phi.
 *
 * The real inner product on S is <f, g> = int_S Re(conj(f) g) dsigma.
 */

#include <functional>
#include <vector>

#include "monoball/poly3.hpp"
#include "monoball/quaternion.hpp"
#include "monoball/rational.hpp"

namespace monoball {

/// coeff * pi
struct ExactSphereValue {
  Rational coeff;

  double value() const;

  ExactSphereValue& operator+=(const ExactSphereValue& o) {
    coeff += o.coeff;
    return *this;
  }
  friend ExactSphereValue operator+(ExactSphereValue a, const ExactSphereValue& b) { return a += b; }
  friend ExactSphereValue operator-(const ExactSphereValue& a, const ExactSphereValue& b) {
    return {Rational(a.coeff - b.coeff)};
  }
  friend ExactSphereValue operator*(const Rational& s, const ExactSphereValue& v) { return {Rational(s * v.coeff)}; }
  friend bool operator==(const ExactSphereValue&, const ExactSphereValue&) = default;
};

/// int_{S^2} w0^a w1^b w2^c dsigma
ExactSphereValue monomial_integral(int a, int b, int c);

/// Real inner product on S of the restrictions of f and g.
ExactSphereValue inner_product_exact(const QPolynomial& f, const QPolynomial& g);
ExactSphereValue inner_product_exact(const Poly3& f, const Poly3& g);
ExactSphereValue norm_sq_exact(const QPolynomial& f);

/// Real inner product in L2(B) over the unit ball: int_B Re(conj(f) g) dx.
ExactSphereValue inner_product_ball_exact(const QPolynomial& f, const QPolynomial& g);

/// Gauss-Legendre nodes (ascending) and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendre gauss_legendre(int n);

/**
 * Product rule on S^2. Node k = i * n_phi + j sits at t = nodes[i],
 * phi = 2 pi j / n_phi, with weight weights[i] * 2 pi / n_phi.
 *
 * Exact for p(t) e^{i k phi} with deg p <= 2 n_theta - 1 and |k| < n_phi,
 * hence for restrictions of polynomials of total degree d when
 * 2 n_theta - 1 >= d and n_phi > d.
 */
class QuadratureRule {
 public:
  QuadratureRule(int n_theta, int n_phi);
  /// Rule exact for products of two restrictions of degree <= max_degree.
  static QuadratureRule for_degree(int max_degree);

  int n_theta() const { return n_theta_; }
  int n_phi() const { return n_phi_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Point3>& points() const { return points_; }
  const std::vector<double>& weights() const { return weights_; }

  /// Largest total polynomial degree integrated exactly.
  int exact_degree() const;
  /// Throws std::domain_error when a degree-`degree` integrand is not integrated exactly.
  void require_exact(int degree) const;

 private:
  int n_theta_;
  int n_phi_;
  std::vector<Point3> points_;
  std::vector<double> weights_;
};

/// Quaternion-valued function on S with the polynomial degree it declares.
struct BoundarySampler {
  std::function<Quaternion<double>(const Point3&)> fn;
  int degree = 0;
};

BoundarySampler make_sampler(const QPolynomial& p);

/// Scalar values at the nodes of a rule, in node order.
struct SphereSamples {
  std::vector<double> values;
  int degree = 0;
};

/// Samples of a scalar functional of the sampler at every node.
SphereSamples sample(const QuadratureRule& rule, const BoundarySampler& f,
                     const std::function<double(const Quaternion<double>&)>& project);

double inner_product_quad(const BoundarySampler& f, const BoundarySampler& g, const QuadratureRule& rule);
/// int_S a b dsigma over node samples.
double integrate_product(const SphereSamples& a, const SphereSamples& b, const QuadratureRule& rule);

/// Neumaier compensated sum, accumulated in the order values are added.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace monoball
