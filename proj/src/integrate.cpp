#include "monoball/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <string>

namespace monoball {

double ExactSphereValue::value() const { return to_double(coeff) * std::numbers::pi; }

namespace {

Rational monomial_integral_coeff(int a, int b, int c) {
  if (a % 2 != 0 || b % 2 != 0 || c % 2 != 0) return 0;
  const Integer num = 4 * double_factorial(a - 1) * double_factorial(b - 1) * double_factorial(c - 1);
  return ratio(num, double_factorial(a + b + c + 1));
}

constexpr int kTableExp = 40;

// Coefficients of pi for all exponents up to kTableExp per axis.
const std::vector<Rational>& monomial_table() {
  static const std::vector<Rational> table = [] {
    constexpr int n = kTableExp + 1;
    std::vector<Rational> t(static_cast<std::size_t>(n * n * n));
    for (int a = 0; a < n; a += 2)
      for (int b = 0; b < n; b += 2)
        for (int c = 0; c < n; c += 2)
          t[static_cast<std::size_t>((a * n + b) * n + c)] = monomial_integral_coeff(a, b, c);
    return t;
  }();
  return table;
}

const Rational& cached_monomial(int a, int b, int c, Rational& scratch) {
  if (a <= kTableExp && b <= kTableExp && c <= kTableExp) {
    constexpr int n = kTableExp + 1;
    return monomial_table()[static_cast<std::size_t>((a * n + b) * n + c)];
  }
  scratch = monomial_integral_coeff(a, b, c);
  return scratch;
}

// sum over term pairs of ca * cb * weight(exponent sum), odd exponents skipped.
template <class Weight>
Rational pair_sum(const Poly3& f, const Poly3& g, Weight&& weight) {
  Rational acc = 0;
  Rational scratch;
  for (const auto& [ea, ca] : f.terms()) {
    for (const auto& [eb, cb] : g.terms()) {
      const int a = ea[0] + eb[0], b = ea[1] + eb[1], c = ea[2] + eb[2];
      if ((a | b | c) & 1) continue;
      const Rational& m = cached_monomial(a, b, c, scratch);
      acc += ca * cb * weight(m, a + b + c);
    }
  }
  return acc;
}

}  // namespace

ExactSphereValue monomial_integral(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("monomial_integral: negative exponent");
  return {monomial_integral_coeff(a, b, c)};
}

ExactSphereValue inner_product_exact(const Poly3& f, const Poly3& g) {
  return {pair_sum(f, g, [](const Rational& m, int) -> const Rational& { return m; })};
}

ExactSphereValue inner_product_exact(const QPolynomial& f, const QPolynomial& g) {
  // Re(conj(f) g) = sum_i f_i g_i
  ExactSphereValue out{0};
  for (int i = 0; i < 4; ++i) out += inner_product_exact(f.component(i), g.component(i));
  return out;
}

ExactSphereValue norm_sq_exact(const QPolynomial& f) { return inner_product_exact(f, f); }

ExactSphereValue inner_product_ball_exact(const QPolynomial& f, const QPolynomial& g) {
  // int_B x^e dx = int_0^1 r^{|e|+2} dr * int_S w^e dsigma
  ExactSphereValue out{0};
  for (int i = 0; i < 4; ++i)
    out.coeff += pair_sum(f.component(i), g.component(i),
                          [](const Rational& m, int d) { return Rational(m / (d + 3)); });
  return out;
}

// ---------------------------------------------------------------------------

GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  GaussLegendre gl;
  gl.nodes.resize(static_cast<std::size_t>(n));
  gl.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 1; k < n; ++k) {
        const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute derivative at the converged node
    double p0 = 1.0, p1 = x;
    for (int k = 1; k < n; ++k) {
      const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    gl.nodes[lo] = -x;
    gl.nodes[hi] = x;
    gl.weights[lo] = w;
    gl.weights[hi] = w;
  }
  if (n % 2 == 1) gl.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return gl;
}

QuadratureRule::QuadratureRule(int n_theta, int n_phi) : n_theta_(n_theta), n_phi_(n_phi) {
  if (n_theta < 1 || n_phi < 1) throw std::invalid_argument("QuadratureRule: node counts must be positive");
  const auto gl = gauss_legendre(n_theta);
  const double dphi = 2.0 * std::numbers::pi / n_phi;
  points_.reserve(static_cast<std::size_t>(n_theta) * static_cast<std::size_t>(n_phi));
  weights_.reserve(points_.capacity());
  for (int i = 0; i < n_theta; ++i) {
    const double t = gl.nodes[static_cast<std::size_t>(i)];
    const double s = std::sqrt((1.0 - t) * (1.0 + t));
    for (int j = 0; j < n_phi; ++j) {
      const double phi = dphi * j;
      points_.push_back({t, s * std::cos(phi), s * std::sin(phi)});
      weights_.push_back(gl.weights[static_cast<std::size_t>(i)] * dphi);
    }
  }
}

QuadratureRule QuadratureRule::for_degree(int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("QuadratureRule::for_degree: negative degree");
  return QuadratureRule(max_degree + 2, 2 * max_degree + 4);
}

int QuadratureRule::exact_degree() const { return std::min(2 * n_theta_ - 1, n_phi_ - 1); }

void QuadratureRule::require_exact(int degree) const {
  if (degree > exact_degree())
    throw std::domain_error("quadrature rule (" + std::to_string(n_theta_) + "x" + std::to_string(n_phi_) +
                            ") is exact only up to degree " + std::to_string(exact_degree()) +
                            ", integrand has degree " + std::to_string(degree));
}

BoundarySampler make_sampler(const QPolynomial& p) {
  auto compiled = std::make_shared<CompiledQPolynomial>(p);
  return {[compiled](const Point3& x) { return compiled->eval(x); }, std::max(p.degree(), 0)};
}

SphereSamples sample(const QuadratureRule& rule, const BoundarySampler& f,
                     const std::function<double(const Quaternion<double>&)>& project) {
  SphereSamples out;
  out.degree = f.degree;
  out.values.reserve(rule.size());
  for (const auto& x : rule.points()) out.values.push_back(project(f.fn(x)));
  return out;
}

double inner_product_quad(const BoundarySampler& f, const BoundarySampler& g, const QuadratureRule& rule) {
  rule.require_exact(f.degree + g.degree);
  CompensatedSum acc;
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const auto a = f.fn(rule.points()[k]);
    const auto b = g.fn(rule.points()[k]);
    acc.add(rule.weights()[k] * (a.a0 * b.a0 + a.a1 * b.a1 + a.a2 * b.a2 + a.a3 * b.a3));
  }
  return acc.value();
}

double integrate_product(const SphereSamples& a, const SphereSamples& b, const QuadratureRule& rule) {
  if (a.values.size() != rule.size() || b.values.size() != rule.size())
    throw std::invalid_argument("integrate_product: sample count does not match the rule");
  rule.require_exact(a.degree + b.degree);
  CompensatedSum acc;
  for (std::size_t k = 0; k < rule.size(); ++k) acc.add(rule.weights()[k] * a.values[k] * b.values[k]);
  return acc.value();
}

void CompensatedSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x))
    comp_ += (sum_ - t) + x;
  else
    comp_ += (x - t) + sum_;
  sum_ = t;
}

}  // namespace monoball
