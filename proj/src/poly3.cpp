#include "monoball/poly3.hpp"

#include <algorithm>
#include <stdexcept>

#include "monoball/json_io.hpp"

namespace monoball {

Poly3::Poly3(const Rational& c) {
  if (c != 0) terms_.emplace(Exponent{0, 0, 0}, c);
}

Poly3 Poly3::monomial(const Exponent& e, const Rational& c) {
  if (e[0] < 0 || e[1] < 0 || e[2] < 0) throw std::invalid_argument("Poly3::monomial: negative exponent");
  Poly3 p;
  p.add_term(e, c);
  return p;
}

Poly3 Poly3::coordinate(int i) {
  if (i < 0 || i > 2) throw std::out_of_range("Poly3::coordinate: index must be 0..2");
  Exponent e{0, 0, 0};
  e[static_cast<std::size_t>(i)] = 1;
  return monomial(e);
}

Rational Poly3::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly3::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

int Poly3::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

bool Poly3::is_homogeneous(int n) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [n](const auto& t) { return total_degree(t.first) == n; });
}

Poly3 Poly3::homogeneous_part(int n) const {
  Poly3 out;
  for (const auto& [e, c] : terms_)
    if (total_degree(e) == n) out.terms_.emplace_hint(out.terms_.end(), e, c);
  return out;
}

Poly3 Poly3::partial(int i) const {
  const auto k = static_cast<std::size_t>(i);
  Poly3 out;
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Exponent d = e;
    d[k] -= 1;
    out.add_term(d, c * e[k]);
  }
  return out;
}

Poly3 Poly3::laplacian() const {
  Poly3 out;
  for (const auto& [e, c] : terms_) {
    for (std::size_t k = 0; k < 3; ++k) {
      if (e[k] < 2) continue;
      Exponent d = e;
      d[k] -= 2;
      out.add_term(d, c * (e[k] * (e[k] - 1)));
    }
  }
  return out;
}

Poly3& Poly3::operator+=(const Poly3& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly3& Poly3::operator-=(const Poly3& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly3& Poly3::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Poly3 operator*(const Poly3& a, const Poly3& b) {
  Poly3 out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return out;
}

namespace {

template <class T>
std::array<std::vector<T>, 3> power_table(const ReducedQuaternion<T>& x, int max_exp) {
  std::array<std::vector<T>, 3> pw;
  const std::array<const T*, 3> xs{&x.x0, &x.x1, &x.x2};
  for (std::size_t k = 0; k < 3; ++k) {
    pw[k].resize(static_cast<std::size_t>(max_exp) + 1);
    pw[k][0] = T(1);
    for (int j = 1; j <= max_exp; ++j)
      pw[k][static_cast<std::size_t>(j)] = pw[k][static_cast<std::size_t>(j - 1)] * *xs[k];
  }
  return pw;
}

template <class T>
T monomial_value(const std::array<std::vector<T>, 3>& pw, const Exponent& e) {
  return pw[0][static_cast<std::size_t>(e[0])] * pw[1][static_cast<std::size_t>(e[1])] *
         pw[2][static_cast<std::size_t>(e[2])];
}

}  // namespace

Rational Poly3::eval(const ReducedQuaternion<Rational>& x) const {
  const auto pw = power_table(x, std::max(degree(), 0));
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += c * monomial_value(pw, e);
  return s;
}

double Poly3::eval(const Point3& x) const {
  const auto pw = power_table(x, std::max(degree(), 0));
  double s = 0.0;
  for (const auto& [e, c] : terms_) s += to_double(c) * monomial_value(pw, e);
  return s;
}

Poly3 pow(const Poly3& p, int k) {
  if (k < 0) throw std::invalid_argument("pow: negative exponent");
  Poly3 out(Rational(1));
  for (int i = 0; i < k; ++i) out = out * p;
  return out;
}

// ---------------------------------------------------------------------------

QPolynomial::QPolynomial(Poly3 scalar) { comps_[0] = std::move(scalar); }

QPolynomial::QPolynomial(Poly3 c0, Poly3 c1, Poly3 c2, Poly3 c3)
    : comps_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

QPolynomial QPolynomial::constant(const Quaternion<Rational>& q) {
  return QPolynomial(Poly3(q.a0), Poly3(q.a1), Poly3(q.a2), Poly3(q.a3));
}

bool QPolynomial::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const Poly3& p) { return p.is_zero(); });
}

int QPolynomial::degree() const {
  int d = -1;
  for (const auto& c : comps_) d = std::max(d, c.degree());
  return d;
}

bool QPolynomial::is_homogeneous(int n) const {
  return std::all_of(comps_.begin(), comps_.end(), [n](const Poly3& p) { return p.is_homogeneous(n); });
}

QPolynomial QPolynomial::homogeneous_part(int n) const {
  QPolynomial out;
  for (int i = 0; i < 4; ++i) out.component(i) = component(i).homogeneous_part(n);
  return out;
}

Quaternion<Rational> QPolynomial::constant_term() const {
  const Exponent zero{0, 0, 0};
  return {comps_[0].coeff(zero), comps_[1].coeff(zero), comps_[2].coeff(zero), comps_[3].coeff(zero)};
}

QPolynomial QPolynomial::partial(int i) const {
  QPolynomial out;
  for (int c = 0; c < 4; ++c) out.component(c) = component(c).partial(i);
  return out;
}

QPolynomial QPolynomial::laplacian() const {
  QPolynomial out;
  for (int c = 0; c < 4; ++c) out.component(c) = component(c).laplacian();
  return out;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  for (std::size_t c = 0; c < 4; ++c) comps_[c] += o.comps_[c];
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
  for (std::size_t c = 0; c < 4; ++c) comps_[c] -= o.comps_[c];
  return *this;
}

QPolynomial& QPolynomial::operator*=(const Rational& s) {
  for (auto& c : comps_) c *= s;
  return *this;
}

QPolynomial QPolynomial::mul_left(const Quaternion<Rational>& q) const {
  // (q p)_c = sum over (a, b) with e_a e_b = +/- e_c of +/- q_a p_b.
  QPolynomial out;
  for (int a = 0; a < 4; ++a) {
    const Rational& qa = q.component(a);
    if (qa == 0) continue;
    for (int b = 0; b < 4; ++b) {
      const auto prod = monoball::mul_unit_left(a, Quaternion<Rational>::unit(b));
      for (int c = 0; c < 4; ++c) {
        const Rational& s = prod.component(c);
        if (s != 0) out.component(c) += component(b) * Rational(qa * s);
      }
    }
  }
  return out;
}

QPolynomial QPolynomial::mul_right(const Quaternion<Rational>& q) const {
  QPolynomial out;
  for (int a = 0; a < 4; ++a) {
    const Rational& qa = q.component(a);
    if (qa == 0) continue;
    for (int b = 0; b < 4; ++b) {
      const auto prod = monoball::mul_unit_right(Quaternion<Rational>::unit(b), a);
      for (int c = 0; c < 4; ++c) {
        const Rational& s = prod.component(c);
        if (s != 0) out.component(c) += component(b) * Rational(qa * s);
      }
    }
  }
  return out;
}

QPolynomial QPolynomial::mul_unit_left(int i) const {
  return mul_left(Quaternion<Rational>::unit(i));
}

QPolynomial QPolynomial::mul_unit_right(int i) const {
  return mul_right(Quaternion<Rational>::unit(i));
}

Quaternion<Rational> QPolynomial::eval(const ReducedQuaternion<Rational>& x) const {
  return {comps_[0].eval(x), comps_[1].eval(x), comps_[2].eval(x), comps_[3].eval(x)};
}

Quaternion<double> QPolynomial::eval(const Point3& x) const {
  return {comps_[0].eval(x), comps_[1].eval(x), comps_[2].eval(x), comps_[3].eval(x)};
}

QPolynomial apply_D(const QPolynomial& p) {
  return p.partial(0) + p.partial(1).mul_unit_left(1) + p.partial(2).mul_unit_left(2);
}

QPolynomial apply_Dbar(const QPolynomial& p) {
  return p.partial(0) - p.partial(1).mul_unit_left(1) - p.partial(2).mul_unit_left(2);
}

bool is_monogenic(const QPolynomial& p) { return apply_D(p).is_zero(); }

QPolynomial euler_operator(const QPolynomial& p) {
  QPolynomial out;
  for (int c = 0; c < 4; ++c) {
    Poly3 acc;
    for (int i = 0; i < 3; ++i) acc += Poly3::coordinate(i) * p.component(c).partial(i);
    out.component(c) = std::move(acc);
  }
  return out;
}

// ---------------------------------------------------------------------------

CompiledQPolynomial::CompiledQPolynomial(const QPolynomial& p) : degree_(p.degree()) {
  std::map<Exponent, std::array<double, 4>> merged;
  for (int c = 0; c < 4; ++c)
    for (const auto& [e, q] : p.component(c).terms()) merged[e][static_cast<std::size_t>(c)] = to_double(q);
  terms_.reserve(merged.size());
  for (const auto& [e, cs] : merged) terms_.push_back({e, cs});
  std::stable_sort(terms_.begin(), terms_.end(),
                   [](const Term& a, const Term& b) { return total_degree(a.exps) < total_degree(b.exps); });
}

Quaternion<double> CompiledQPolynomial::eval(const Point3& x) const {
  Quaternion<double> out;
  if (terms_.empty()) return out;
  const auto pw = power_table(x, degree_);
  for (const auto& t : terms_) {
    const double m = monomial_value(pw, t.exps);
    out.a0 += t.coeffs[0] * m;
    out.a1 += t.coeffs[1] * m;
    out.a2 += t.coeffs[2] * m;
    out.a3 += t.coeffs[3] * m;
  }
  return out;
}

std::vector<Quaternion<double>> CompiledQPolynomial::eval_by_degree(const Point3& x) const {
  std::vector<Quaternion<double>> out(static_cast<std::size_t>(std::max(degree_, 0)) + 1);
  if (terms_.empty()) return out;
  const auto pw = power_table(x, degree_);
  for (const auto& t : terms_) {
    const double m = monomial_value(pw, t.exps);
    auto& q = out[static_cast<std::size_t>(total_degree(t.exps))];
    q.a0 += t.coeffs[0] * m;
    q.a1 += t.coeffs[1] * m;
    q.a2 += t.coeffs[2] * m;
    q.a3 += t.coeffs[3] * m;
  }
  return out;
}

// ---------------------------------------------------------------------------

nlohmann::json to_json(const QPolynomial& p) {
  auto out = nlohmann::json::array();
  for (int c = 0; c < 4; ++c) {
    for (const auto& [e, q] : p.component(c).terms()) {
      out.push_back({{"component", c},
                     {"exps", {e[0], e[1], e[2]}},
                     {"num", integer_to_json(q.get_num())},
                     {"den", integer_to_json(q.get_den())}});
    }
  }
  return out;
}

QPolynomial qpolynomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("qpolynomial_from_json: expected an array of terms");
  QPolynomial p;
  for (const auto& rec : j) {
    const int c = rec.at("component").get<int>();
    if (c < 0 || c > 3) throw std::invalid_argument("qpolynomial_from_json: component out of range");
    const auto exps = rec.at("exps").get<std::array<int, 3>>();
    Rational q(integer_from_json(rec.at("num")), integer_from_json(rec.at("den")));
    if (q.get_den() == 0) throw std::invalid_argument("qpolynomial_from_json: zero denominator");
    q.canonicalize();
    p.component(c).add_term(exps, q);
  }
  return p;
}

}  // namespace monoball
