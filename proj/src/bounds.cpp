#include "monoball/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "monoball/parallel.hpp"

namespace monoball {

void require_radius(double r) {
  if (!(r >= 0.0 && r < 0.5))
    throw std::domain_error("radius must satisfy 0 <= r < 1/2 (got " + std::to_string(r) + ")");
}

double a1(double r) {
  require_radius(r);
  const double d = 2.0 * r - 1.0;
  return (3.0 * (3.0 - 4.0 * r) + 8.0 * r * r * (2.0 - r)) / (d * d);
}

double a2(double r) {
  require_radius(r);
  return 3.0 * (1.0 - r);
}

double closed_form_prefactor(double r) {
  require_radius(r);
  const double d = 2.0 * r - 1.0;
  return 4.0 * r / (d * d);
}

namespace {

// sum_{n>=1} x^n p(n) for a positive polynomial p whose ratio p(n+1)/p(n)
// decreases in n. Stops once the geometric tail bound t_{n+1} / (1 - rho)
// with rho = x p(n+2)/p(n+1) drops below tol.
template <class P>
double positive_series(double x, P&& p, double tol) {
  if (x == 0.0) return 0.0;
  CompensatedSum sum;
  double xn = 1.0;
  for (int n = 1; n < 100000; ++n) {
    xn *= x;
    sum.add(xn * p(n));
    const double next = xn * x * p(n + 1);
    const double rho = x * p(n + 2) / p(n + 1);
    if (rho < 1.0 && next / (1.0 - rho) < tol) return sum.value();
  }
  throw std::runtime_error("positive_series: no convergence");
}

}  // namespace

double series_part1(double r, double tol) {
  require_radius(r);
  return 0.5 * positive_series(2.0 * r, [](int n) { return (n + 1.0) * (n + 2.0) * (2.0 * n + 1.0); }, 2.0 * tol);
}

double series_part2(double r, double tol) {
  require_radius(r);
  return 3.0 * positive_series(2.0 * r, [](int n) { return n + 1.0; }, tol / 3.0);
}

double rhs_series(double r, double re_norm, double re_e1_norm, double tol) {
  return re_norm * series_part1(r, tol) + re_e1_norm * series_part2(r, tol);
}

double rhs_closed(double r, double re_norm, double re_e1_norm) {
  return closed_form_prefactor(r) * (re_norm * a1(r) + re_e1_norm * a2(r));
}

double a1_closed_to_series_ratio(double r, double tol) {
  if (r == 0.0) throw std::domain_error("a1_closed_to_series_ratio: both parts vanish at r = 0");
  return closed_form_prefactor(r) * a1(r) / series_part1(r, tol);
}

// ---------------------------------------------------------------------------

CoefficientBoundReport coefficient_bounds_check(const QPolynomial& f, const NormalizedBasis& basis) {
  const auto proj = project(f, basis);
  CoefficientBoundReport out;
  out.re_norm = std::sqrt(inner_product_exact(f.component(0), f.component(0)).value());
  out.re_e1_norm = std::sqrt(inner_product_exact(f.component(1), f.component(1)).value());
  out.min_slack = std::numeric_limits<double>::infinity();
  for (int n = 1; n <= proj.coeffs.max_degree; ++n) {
    const auto& b = basis.block(n);
    for (std::size_t k = 0; k < b.elements.size(); ++k) {
      CoefficientBoundEntry e;
      e.index = b.elements[k].index();
      e.lhs = b.ball_weight() * std::abs(proj.coeffs.values[static_cast<std::size_t>(n)][k]);
      const double norm = std::sqrt(b.norm_sq[k].value());
      e.rhs = b.is_f2(k) ? norm / std::sqrt(b.re_e1_norm_sq[k].value()) * out.re_e1_norm
                         : norm / std::sqrt(b.re_norm_sq[k].value()) * out.re_norm;
      // equality is attained by single-element f; allow rounding
      const double slack = e.slack() + 1e-12 * std::max(1.0, e.rhs);
      out.min_slack = std::min(out.min_slack, slack);
      out.entries.push_back(e);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

SphereMaxEstimator::SphereMaxEstimator(const QPolynomial& f, MaxEstimateOptions options)
    : compiled_(f), options_(options), degree_(std::max(f.degree(), 0)) {
  if (options_.n_theta < 2 || options_.n_phi < 1) throw std::invalid_argument("SphereMaxEstimator: grid too small");
  for (int i = 0; i < options_.n_theta; ++i) thetas_.push_back(std::numbers::pi * i / (options_.n_theta - 1));
  for (int j = 0; j < options_.n_phi; ++j) phis_.push_back(2.0 * std::numbers::pi * j / options_.n_phi);

  const std::size_t stride = 4 * (static_cast<std::size_t>(degree_) + 1);
  cache_.resize(thetas_.size() * phis_.size() * stride);
  std::size_t p = 0;
  for (double theta : thetas_) {
    for (double phi : phis_) {
      const auto parts = compiled_.eval_by_degree(SphericalPoint{theta, phi}.to_cartesian());
      for (std::size_t d = 0; d < parts.size(); ++d) {
        double* slot = &cache_[p * stride + 4 * d];
        slot[0] = parts[d].a0;
        slot[1] = parts[d].a1;
        slot[2] = parts[d].a2;
        slot[3] = parts[d].a3;
      }
      ++p;
    }
  }
}

double SphereMaxEstimator::value_at(double r, double theta, double phi) const {
  return norm(compiled_.eval(SphericalPoint{theta, phi, r}.to_cartesian()));
}

double SphereMaxEstimator::max_abs(double r) const {
  if (r == 0.0) return norm(compiled_.eval({0.0, 0.0, 0.0}));
  const std::size_t stride = 4 * (static_cast<std::size_t>(degree_) + 1);
  const std::size_t count = thetas_.size() * phis_.size();
  double best = -1.0;
  std::size_t best_p = 0;
  for (std::size_t p = 0; p < count; ++p) {
    const double* base = &cache_[p * stride];
    double q[4] = {0.0, 0.0, 0.0, 0.0};
    for (int d = degree_; d >= 0; --d)
      for (int c = 0; c < 4; ++c) q[c] = q[c] * r + base[4 * d + c];
    const double v = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
    if (v > best) {
      best = v;
      best_p = p;
    }
  }

  double theta0 = thetas_[best_p / phis_.size()];
  double phi0 = phis_[best_p % phis_.size()];
  double h_theta = std::numbers::pi / (options_.n_theta - 1);
  double h_phi = 2.0 * std::numbers::pi / options_.n_phi;
  constexpr double kGolden = 0.6180339887498949;
  for (int round = 0; round < options_.refine_rounds; ++round) {
    double round_theta = theta0, round_phi = phi0;
    for (int k = 0; k < options_.refine_points; ++k) {
      const double u = std::fmod((k + 1) * kGolden, 1.0);
      const double v = (k + 0.5) / options_.refine_points;
      const double theta = std::clamp(theta0 + (2.0 * v - 1.0) * h_theta, 0.0, std::numbers::pi);
      const double phi = phi0 + (2.0 * u - 1.0) * h_phi;
      const double val = value_at(r, theta, phi);
      if (val > best) {
        best = val;
        round_theta = theta;
        round_phi = phi;
      }
    }
    theta0 = round_theta;
    phi0 = round_phi;
    h_theta *= 0.5;
    h_phi *= 0.5;
  }
  return best;
}

std::vector<BoundReport> certify(const QPolynomial& f, const std::vector<double>& r_grid, const QuadratureRule& rule,
                                 const CertifyOptions& options) {
  for (double r : r_grid) require_radius(r);
  if (!f.is_reduced()) throw std::invalid_argument("certify: input has a nonzero e3 component");

  const auto [re_f, re_fe1] = real_part_samples(f, rule);
  const double re_norm = std::sqrt(std::max(0.0, integrate_product(re_f, re_f, rule)));
  const double re_e1_norm = std::sqrt(std::max(0.0, integrate_product(re_fe1, re_fe1, rule)));
  const auto f0 = f.constant_term();
  const bool f0_zero = f0 == Quaternion<Rational>();
  const double f0_abs = norm(f0);
  const SphereMaxEstimator estimator(f, options.max_estimate);

  std::vector<BoundReport> out(r_grid.size());
  parallel_for(r_grid.size(), [&](std::size_t i) {
    BoundReport& rep = out[i];
    const double r = r_grid[i];
    rep.r = r;
    rep.max_f = estimator.max_abs(r);
    rep.f0_abs = f0_abs;
    rep.re_norm = re_norm;
    rep.re_e1_norm = re_e1_norm;
    rep.a1 = a1(r);
    rep.a2 = a2(r);
    rep.rhs_series = f0_abs + rhs_series(r, re_norm, re_e1_norm, options.series_tol);
    rep.rhs_closed = f0_abs + rhs_closed(r, re_norm, re_e1_norm);
    rep.pass_series = rep.max_f <= rep.rhs_series + kBoundSlack;
    rep.pass_closed = rep.max_f <= rep.rhs_closed + kBoundSlack;

    const double weighted = re_norm * rep.a1 + re_e1_norm * rep.a2;
    const double d2 = (2.0 * r - 1.0) * (2.0 * r - 1.0);
    rep.schwarz_hypothesis = f0_zero && weighted <= 4.0 / d2;
    rep.schwarz_counterexample = rep.schwarz_hypothesis && rep.max_f > r + kBoundSlack;
    rep.schwarz_alt_hypothesis = f0_zero && weighted <= d2 / 4.0;
    rep.schwarz_alt_counterexample = rep.schwarz_alt_hypothesis && rep.max_f > r + kBoundSlack;
  });
  return out;
}

// ---------------------------------------------------------------------------

double UniformSource::operator()(double lo, double hi) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

FourierCoefficients random_coefficients(UniformSource& rng, const RandomMonogenicOptions& options) {
  if (options.max_degree < 0) throw std::invalid_argument("random_coefficients: negative degree");
  auto c = FourierCoefficients::zeros(options.max_degree);
  if (!options.zero_f0) {
    c.f0.x0 = rng(options.lo, options.hi);
    c.f0.x1 = rng(options.lo, options.hi);
    c.f0.x2 = rng(options.lo, options.hi);
  }
  for (int n = 1; n <= options.max_degree; ++n)
    for (auto& v : c.values[static_cast<std::size_t>(n)]) v = rng(options.lo, options.hi);
  return c;
}

}  // namespace monoball
