#include "monoball/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace monoball {

Point3 SphericalPoint::to_cartesian() const {
  const double s = std::sin(theta);
  return {r * std::cos(theta), r * s * std::cos(phi), r * s * std::sin(phi)};
}

SphericalPoint SphericalPoint::from_cartesian(const Point3& x) {
  const double rho = std::hypot(x.x1, x.x2);
  const double r = std::hypot(x.x0, rho);
  if (r == 0.0) throw std::domain_error("SphericalPoint::from_cartesian: origin has no direction");
  double phi = std::atan2(x.x2, x.x1);
  if (phi <= 0.0) phi += 2.0 * std::numbers::pi;
  return {std::atan2(rho, x.x0), phi, r};
}

std::string_view to_string(MonogenicKind k) {
  switch (k) {
    case MonogenicKind::X0: return "X0";
    case MonogenicKind::X: return "X";
    case MonogenicKind::Y: return "Y";
  }
  return "?";
}

MonogenicKind monogenic_kind_from_string(std::string_view s) {
  if (s == "X0") return MonogenicKind::X0;
  if (s == "X") return MonogenicKind::X;
  if (s == "Y") return MonogenicKind::Y;
  throw std::invalid_argument("unknown basis kind: " + std::string(s));
}

namespace {

Rational binomial(int n, int k) { return Rational(factorial(n)) / Rational(factorial(k) * factorial(n - k)); }

// Real or imaginary part of (x1 + i x2)^m.
Poly3 azimuthal_part(int m, HarmonicKind kind) {
  Poly3 out;
  for (int j = 0; j <= m; ++j) {
    const bool even = j % 2 == 0;
    if (even != (kind == HarmonicKind::U)) continue;
    // i^j = (-1)^{j/2} for even j, i (-1)^{(j-1)/2} for odd j
    const int sign = ((even ? j / 2 : (j - 1) / 2) % 2 == 0) ? 1 : -1;
    out.add_term({0, m - j, j}, binomial(m, j) * sign);
  }
  return out;
}

}  // namespace

Poly3 solid_harmonic(int n_plus_1, int m, HarmonicKind kind) {
  if (n_plus_1 < 0) throw std::invalid_argument("solid_harmonic: degree must be non-negative");
  if (m < 0 || m > n_plus_1) throw std::invalid_argument("solid_harmonic: order must satisfy 0 <= m <= n+1");
  if (kind == HarmonicKind::V && m == 0) throw std::invalid_argument("solid_harmonic: V requires m >= 1");

  // r^N P^m_N(cos theta) = [r^m sin^m theta] * sum_k q_k x0^k r^{N-m-k}
  const auto q = assoc_legendre(n_plus_1, m).poly_part;
  const Poly3 r_sq = Poly3::monomial({2, 0, 0}) + Poly3::monomial({0, 2, 0}) + Poly3::monomial({0, 0, 2});
  Poly3 radial;
  for (int k = 0; k <= q.degree(); ++k) {
    const Rational c = q.coeff(k);
    if (c == 0) continue;
    const int rest = n_plus_1 - m - k;
    if (rest % 2 != 0) throw std::logic_error("solid_harmonic: Legendre parity violated");
    radial += Poly3::monomial({k, 0, 0}, c) * pow(r_sq, rest / 2);
  }
  return radial * azimuthal_part(m, kind);
}

MonogenicBasisElement::MonogenicBasisElement(int n, MonogenicKind kind, int m)
    : index_{n, kind, kind == MonogenicKind::X0 ? 0 : m} {
  if (n < 0) throw std::invalid_argument("spherical_monogenic: degree must be non-negative");
  if (kind != MonogenicKind::X0 && (m < 1 || m > n + 1))
    throw std::invalid_argument("spherical_monogenic: order must satisfy 1 <= m <= n+1");
  legendre_ = assoc_legendre(n + 1, index_.m);
  const auto harmonic_kind = kind == MonogenicKind::Y ? HarmonicKind::V : HarmonicKind::U;
  solid_ = apply_Dbar(QPolynomial(solid_harmonic(n + 1, index_.m, harmonic_kind))) * Rational(1, 2);
}

MonogenicBasisElement::TrigCoefficients MonogenicBasisElement::trig_coefficients(double theta) const {
  const int n = index_.n;
  const int m = index_.m;
  const double t = std::cos(theta);
  const double s = std::sin(theta);
  const double q = legendre_.poly_part.eval(t);
  const double dq = legendre_.poly_part.derivative().eval(t);
  const double g = (1.0 - t * t) * dq - m * t * q;  // (1-t^2)^{1 - m/2} d/dt P^m

  const double p = std::pow(s, m) * q;
  const double sin2_dp = std::pow(s, m) * g;                     // sin^2 theta dP/dt
  const double sin_dp = m == 0 ? s * dq : std::pow(s, m - 1) * g;  // sin theta dP/dt
  const double c = m == 0 ? 0.0 : 0.5 * m * std::pow(s, m - 1) * q;

  return {0.5 * (sin2_dp + (n + 1) * t * p), 0.5 * (t * sin_dp - (n + 1) * s * p), c};
}

Quaternion<double> MonogenicBasisElement::eval_trig(double theta, double phi) const {
  const auto [a, b, c] = trig_coefficients(theta);
  const int m = index_.m;
  const double cp = std::cos(phi), sp = std::sin(phi);
  const double cm = std::cos(m * phi), sm = std::sin(m * phi);
  switch (index_.kind) {
    case MonogenicKind::X0:
      return {a, b * cp, b * sp, 0.0};
    case MonogenicKind::X:
      return {a * cm, b * cp * cm - c * sp * sm, b * sp * cm + c * cp * sm, 0.0};
    case MonogenicKind::Y:
      return {a * sm, b * cp * sm + c * sp * cm, b * sp * sm - c * cp * cm, 0.0};
  }
  throw std::logic_error("eval_trig: bad kind");
}

MonogenicBasisElement spherical_monogenic(int n, int m, MonogenicKind kind) { return {n, kind, m}; }

std::vector<BasisIndex> family_indices(int n) {
  std::vector<BasisIndex> out;
  out.reserve(static_cast<std::size_t>(2 * n + 3));
  out.push_back({n, MonogenicKind::X0, 0});
  for (int m = 1; m <= n + 1; ++m) {
    out.push_back({n, MonogenicKind::X, m});
    out.push_back({n, MonogenicKind::Y, m});
  }
  return out;
}

std::vector<MonogenicBasisElement> monogenic_family(int n) {
  if (n < 0) throw std::invalid_argument("monogenic_family: degree must be non-negative");
  std::vector<MonogenicBasisElement> out;
  for (const auto& idx : family_indices(n)) out.emplace_back(idx.n, idx.kind, idx.m);
  return out;
}

double pointwise_bound(int n, int m, MonogenicKind kind) {
  const double lead = (n + 1) * std::ldexp(1.0, n);
  if (kind == MonogenicKind::X0) return lead * std::sqrt(std::numbers::pi * (n + 1) / (2.0 * n + 3));
  const double fac = to_double(ratio(factorial(n + 1 + m), factorial(n + 1 - m)));
  return lead * std::sqrt(std::numbers::pi / 2.0 * (n + 1) / (2.0 * n + 3) * fac);
}

PointwiseBoundResult pointwise_bound_check(const MonogenicBasisElement& e, const std::vector<Point3>& samples) {
  PointwiseBoundResult out;
  out.bound = pointwise_bound(e.degree(), e.order(), e.kind());
  const CompiledQPolynomial f(e.solid());
  for (const auto& x : samples) out.max_value = std::max(out.max_value, norm(f.eval(x)));
  out.worst_margin = out.bound - out.max_value;
  return out;
}

std::vector<Point3> sphere_grid(int n_theta, int n_phi) {
  if (n_theta < 1 || n_phi < 1) throw std::invalid_argument("sphere_grid: counts must be positive");
  std::vector<Point3> out;
  out.reserve(static_cast<std::size_t>(n_theta) * static_cast<std::size_t>(n_phi));
  for (int i = 0; i < n_theta; ++i) {
    const double theta = std::numbers::pi * (i + 0.5) / n_theta;
    for (int j = 0; j < n_phi; ++j)
      out.push_back(SphericalPoint{theta, 2.0 * std::numbers::pi * j / n_phi}.to_cartesian());
  }
  return out;
}

}  // namespace monoball
