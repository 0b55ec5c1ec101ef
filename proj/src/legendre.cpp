#include "monoball/legendre.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace monoball {

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::monomial(int k, const Rational& c) {
  if (k < 0) throw std::invalid_argument("UPoly::monomial: negative exponent");
  std::vector<Rational> cs(static_cast<std::size_t>(k) + 1);
  cs.back() = c;
  return UPoly(std::move(cs));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

UPoly UPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UPoly(std::move(out));
}

Rational UPoly::integral_pm1() const {
  Rational s = 0;
  for (std::size_t i = 0; i < coeffs_.size(); i += 2) s += coeffs_[i] * Rational(2, static_cast<long>(i) + 1);
  return s;
}

Rational UPoly::eval(const Rational& t) const {
  Rational s = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) s = s * t + *it;
  return s;
}

double UPoly::eval(double t) const {
  double s = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) s = s * t + to_double(*it);
  return s;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UPoly(std::move(out));
}

UPoly pow(const UPoly& p, int k) {
  if (k < 0) throw std::invalid_argument("pow: negative exponent");
  UPoly out = UPoly::constant(1);
  for (int i = 0; i < k; ++i) out = out * p;
  return out;
}

UPoly one_minus_t_sq() { return UPoly({Rational(1), Rational(0), Rational(-1)}); }

UPoly legendre(int k) {
  if (k < 0) throw std::invalid_argument("legendre: degree must be non-negative");
  UPoly prev = UPoly::constant(1);
  if (k == 0) return prev;
  UPoly cur = UPoly::monomial(1);
  const UPoly t = UPoly::monomial(1);
  for (int j = 1; j < k; ++j) {
    // (j+1) P_{j+1} = (2j+1) t P_j - j P_{j-1}
    UPoly next = (t * cur) * Rational(2 * j + 1, j + 1) - prev * Rational(j, j + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

AssocLegendre assoc_legendre(int degree, int m) {
  if (degree < 0) throw std::invalid_argument("assoc_legendre: degree must be non-negative");
  if (m < 0 || m > degree) throw std::invalid_argument("assoc_legendre: order must satisfy 0 <= m <= degree");
  UPoly q = legendre(degree);
  for (int i = 0; i < m; ++i) q = q.derivative();
  return {degree, m, std::move(q)};
}

double AssocLegendre::eval(double t, double sin_theta) const {
  return std::pow(sin_theta, order) * poly_part.eval(t);
}

double AssocLegendre::eval_scaled_derivative(double t, double sin_theta) const {
  const double q = poly_part.eval(t);
  const double dq = poly_part.derivative().eval(t);
  return std::pow(sin_theta, order) * ((1.0 - t * t) * dq - order * t * q);
}

bool check_recurrence(int n_plus_1, int m) {
  const int n = n_plus_1 - 1;
  if (n < 0) throw std::invalid_argument("check_recurrence: degree must be at least 1");
  const auto hi = assoc_legendre(n_plus_1, m);
  const UPoly lo = m <= n ? assoc_legendre(n, m).poly_part : UPoly{};
  const UPoly t = UPoly::monomial(1);
  const UPoly& q = hi.poly_part;
  // d/dt[(1-t^2)^{m/2} q] = (1-t^2)^{m/2 - 1} [(1-t^2) q' - m t q]
  const UPoly lhs = one_minus_t_sq() * q.derivative() - (t * q) * Rational(m);
  const UPoly rhs = lo * Rational(n + m + 1) - (t * q) * Rational(n + 1);
  return lhs == rhs;
}

bool check_sectoral_identity(int m) {
  const auto p = assoc_legendre(m, m);
  return p.poly_part == UPoly::constant(Rational(double_factorial(2 * m - 1)));
}

LegendreNormCheck l2_norm_sq(int n_plus_1, int m) {
  const auto p = assoc_legendre(n_plus_1, m);
  const UPoly integrand = pow(one_minus_t_sq(), m) * p.poly_part * p.poly_part;
  const int n = n_plus_1 - 1;
  const Rational formula = Rational(2, 2 * n + 3) * ratio(factorial(n + 1 + m), factorial(n + 1 - m));
  return {integrand.integral_pm1(), formula};
}

Rational overlap_integral(int j, int k, int m) {
  const auto a = assoc_legendre(j, m);
  const auto b = assoc_legendre(k, m);
  return (pow(one_minus_t_sq(), m) * a.poly_part * b.poly_part).integral_pm1();
}

}  // namespace monoball
