#pragma once

/**
 * Legendre polynomials and associated Legendre functions, exact.
 *
 * The associated function of degree k and order m is
 *
 *     P^m_k(t) = (1 - t^2)^{m/2} d^m/dt^m P_k(t)
 *
 * with no Condon-Shortley phase. The half-integer power is kept symbolic:
 * an `AssocLegendre` stores m and the polynomial factor d^m P_k, so every
 * identity about these functions reduces to an identity between ordinary
 * polynomials in t.
 */

#include <vector>

#include "monoball/rational.hpp"

namespace monoball {

/// Dense univariate polynomial with exact coefficients; coeffs[i] multiplies t^i.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c);
  /// c * t^k
  static UPoly monomial(int k, const Rational& c = 1);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of t^i, zero past the end.
  Rational coeff(int i) const;
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  UPoly derivative() const;
  /// Exact integral over [-1, 1].
  Rational integral_pm1() const;

  Rational eval(const Rational& t) const;
  double eval(double t) const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const Rational& s);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }
  friend UPoly operator*(const Rational& s, UPoly a) { return a *= s; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

UPoly pow(const UPoly& p, int k);

/// 1 - t^2
UPoly one_minus_t_sq();

/// P_k via Bonnet's recurrence. Throws std::invalid_argument for k < 0.
UPoly legendre(int k);

struct AssocLegendre {
  int degree = 0;  // k = n + 1
  int order = 0;   // m, 0 <= m <= k
  UPoly poly_part; // d^m/dt^m P_k

  /// P^m_k(t) for t in [-1, 1]; sin_theta = sqrt(1 - t^2) is passed in so callers
  /// on the sphere can supply it without cancellation.
  double eval(double t, double sin_theta) const;
  /// d/dt P^m_k(t) multiplied by (1 - t^2): (1-t^2)^{m/2} [(1-t^2) q' - m t q].
  /// Finite at t = +/-1 for every m.
  double eval_scaled_derivative(double t, double sin_theta) const;
};

/// Throws std::invalid_argument unless 0 <= m <= degree.
AssocLegendre assoc_legendre(int degree, int m);

/**
 * Recurrence (1 - t^2) (P^m_{n+1})' = (n+m+1) P^m_n - (n+1) t P^m_{n+1},
 * checked as a polynomial identity after dividing out (1 - t^2)^{m/2}.
 * P^m_n is taken as zero when m > n.
 */
bool check_recurrence(int n_plus_1, int m);

/// P^m_m = (2m-1)!! (1-t^2)^{m/2}, exact.
bool check_sectoral_identity(int m);

struct LegendreNormCheck {
  Rational integral;  // exact integral of (P^m_{n+1})^2 over [-1, 1]
  Rational formula;   // 2/(2n+3) (n+1+m)!/(n+1-m)!
  bool matches() const { return integral == formula; }
};

LegendreNormCheck l2_norm_sq(int n_plus_1, int m);

/// Exact integral of P^m_j P^m_k over [-1, 1].
Rational overlap_integral(int j, int k, int m);

}  // namespace monoball
