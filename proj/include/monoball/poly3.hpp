#pragma once

/**
 * Exact polynomials in (x0, x1, x2).
 *
 * `Poly3` is a real polynomial stored as a sparse map from exponent triple
 * to rational coefficient. `QPolynomial` is a quaternion-valued polynomial
 * stored as four `Poly3` components (along 1, e1, e2, e3).
 *
 * Both types keep a canonical form: zero coefficients are never stored, so
 * structural equality is polynomial equality.
 *
 * The first order operators are the left-acting ones:
 *   D    = d/dx0 + e1 d/dx1 + e2 d/dx2
 *   Dbar = d/dx0 - e1 d/dx1 - e2 d/dx2
 */

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "json.hpp"

#include "monoball/quaternion.hpp"
#include "monoball/rational.hpp"

namespace monoball {

using Exponent = std::array<int, 3>;

inline int total_degree(const Exponent& e) { return e[0] + e[1] + e[2]; }

class Poly3 {
 public:
  using Terms = std::map<Exponent, Rational>;

  Poly3() = default;
  explicit Poly3(const Rational& c);

  static Poly3 monomial(const Exponent& e, const Rational& c = 1);
  /// The coordinate x_i, i in 0..2.
  static Poly3 coordinate(int i);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of x^e (zero if absent).
  Rational coeff(const Exponent& e) const;
  /// Adds c to the coefficient of x^e, keeping the canonical form.
  void add_term(const Exponent& e, const Rational& c);

  /// -1 for the zero polynomial.
  int degree() const;
  /// True for the zero polynomial and for polynomials whose terms all have degree n.
  bool is_homogeneous(int n) const;
  /// Part of total degree n.
  Poly3 homogeneous_part(int n) const;

  Poly3 partial(int i) const;
  Poly3 laplacian() const;

  Poly3& operator+=(const Poly3& o);
  Poly3& operator-=(const Poly3& o);
  Poly3& operator*=(const Rational& s);

  friend Poly3 operator+(Poly3 a, const Poly3& b) { return a += b; }
  friend Poly3 operator-(Poly3 a, const Poly3& b) { return a -= b; }
  friend Poly3 operator-(Poly3 a) { return a *= Rational(-1); }
  friend Poly3 operator*(Poly3 a, const Rational& s) { return a *= s; }
  friend Poly3 operator*(const Rational& s, Poly3 a) { return a *= s; }
  friend Poly3 operator*(const Poly3& a, const Poly3& b);

  friend bool operator==(const Poly3& a, const Poly3& b) { return a.terms_ == b.terms_; }

  Rational eval(const ReducedQuaternion<Rational>& x) const;
  double eval(const Point3& x) const;

 private:
  Terms terms_;
};

Poly3 pow(const Poly3& p, int k);

class QPolynomial {
 public:
  QPolynomial() = default;
  /// Real polynomial embedded along the scalar unit.
  explicit QPolynomial(Poly3 scalar);
  QPolynomial(Poly3 c0, Poly3 c1, Poly3 c2, Poly3 c3);
  static QPolynomial constant(const Quaternion<Rational>& q);

  const Poly3& component(int i) const { return comps_.at(static_cast<std::size_t>(i)); }
  Poly3& component(int i) { return comps_.at(static_cast<std::size_t>(i)); }

  bool is_zero() const;
  int degree() const;
  bool is_homogeneous(int n) const;
  QPolynomial homogeneous_part(int n) const;
  /// Value at the origin.
  Quaternion<Rational> constant_term() const;
  /// True when the e3 component vanishes identically.
  bool is_reduced() const { return comps_[3].is_zero(); }

  QPolynomial partial(int i) const;
  QPolynomial laplacian() const;

  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  QPolynomial& operator*=(const Rational& s);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(QPolynomial a, const Rational& s) { return a *= s; }
  friend QPolynomial operator*(const Rational& s, QPolynomial a) { return a *= s; }

  /// e_i * p.
  QPolynomial mul_unit_left(int i) const;
  /// p * e_i.
  QPolynomial mul_unit_right(int i) const;
  /// q * p and p * q for a constant quaternion q.
  QPolynomial mul_left(const Quaternion<Rational>& q) const;
  QPolynomial mul_right(const Quaternion<Rational>& q) const;

  friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.comps_ == b.comps_; }

  Quaternion<Rational> eval(const ReducedQuaternion<Rational>& x) const;
  Quaternion<double> eval(const Point3& x) const;

 private:
  std::array<Poly3, 4> comps_;
};

QPolynomial apply_D(const QPolynomial& p);
QPolynomial apply_Dbar(const QPolynomial& p);
inline QPolynomial laplacian(const QPolynomial& p) { return p.laplacian(); }

/// Left monogenic: D p == 0 exactly.
bool is_monogenic(const QPolynomial& p);
inline bool is_homogeneous(const QPolynomial& p, int n) { return p.is_homogeneous(n); }

/// x0 dp/dx0 + x1 dp/dx1 + x2 dp/dx2.
QPolynomial euler_operator(const QPolynomial& p);

/**
 * Float evaluator compiled from a QPolynomial.
 *
 * Coefficients are converted once; evaluation uses power tables. Terms are
 * grouped by total degree so callers can evaluate the homogeneous parts
 * separately and recombine them for different radii.
 */
class CompiledQPolynomial {
 public:
  CompiledQPolynomial() = default;
  explicit CompiledQPolynomial(const QPolynomial& p);

  int degree() const { return degree_; }
  Quaternion<double> eval(const Point3& x) const;
  /// Values of each homogeneous part at x; result[d] is the degree-d part.
  std::vector<Quaternion<double>> eval_by_degree(const Point3& x) const;

 private:
  struct Term {
    Exponent exps;
    std::array<double, 4> coeffs;
  };
  std::vector<Term> terms_;
  int degree_ = -1;
};

/// Canonical JSON form: records {component, exps, num, den} sorted by
/// (component, exps).
nlohmann::json to_json(const QPolynomial& p);
QPolynomial qpolynomial_from_json(const nlohmann::json& j);

}  // namespace monoball
