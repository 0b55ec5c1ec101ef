#include "monoball/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "monoball/parallel.hpp"

namespace monoball {

double ScaledSqrt::value() const { return to_double(num) / std::sqrt(to_double(radicand)); }

double DegreeBlock::ball_weight() const { return std::sqrt(2.0 * n + 3.0); }

std::size_t DegreeBlock::position(MonogenicKind kind, int m) const {
  if (kind == MonogenicKind::X0) return 0;
  if (m < 1 || m > n + 1) throw std::out_of_range("DegreeBlock::position: order out of range");
  return static_cast<std::size_t>(2 * m - 1 + (kind == MonogenicKind::Y ? 1 : 0));
}

double NormalizedBasis::inv_norm(int n, std::size_t k) const { return 1.0 / std::sqrt(block(n).norm_sq.at(k).value()); }

NormalizedBasis normalize_basis(int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("normalize_basis: max_degree must be non-negative");
  std::vector<std::vector<BasisIndex>> indices;
  std::vector<std::pair<int, std::size_t>> jobs;
  for (int n = 0; n <= max_degree; ++n) {
    indices.push_back(family_indices(n));
    for (std::size_t k = 0; k < indices.back().size(); ++k) jobs.emplace_back(n, k);
  }

  struct Slot {
    std::optional<MonogenicBasisElement> element;
    ExactSphereValue norm_sq, re_norm_sq, re_e1_norm_sq;
  };
  std::vector<Slot> slots(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t j) {
    const auto& idx = indices[static_cast<std::size_t>(jobs[j].first)][jobs[j].second];
    auto& slot = slots[j];
    slot.element.emplace(idx.n, idx.kind, idx.m);
    const auto& solid = slot.element->solid();
    slot.norm_sq = norm_sq_exact(solid);
    slot.re_norm_sq = inner_product_exact(solid.component(0), solid.component(0));
    // Re(X e1) = -X_1
    slot.re_e1_norm_sq = inner_product_exact(solid.component(1), solid.component(1));
  });

  std::vector<DegreeBlock> blocks(static_cast<std::size_t>(max_degree) + 1);
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    auto& b = blocks[static_cast<std::size_t>(jobs[j].first)];
    b.n = jobs[j].first;
    b.elements.push_back(std::move(*slots[j].element));
    b.norm_sq.push_back(slots[j].norm_sq);
    b.re_norm_sq.push_back(slots[j].re_norm_sq);
    b.re_e1_norm_sq.push_back(slots[j].re_e1_norm_sq);
  }
  parallel_for(blocks.size(), [&](std::size_t n) {
    auto& b = blocks[n];
    const std::size_t size = b.elements.size();
    b.e1_gram.assign(size, std::vector<ExactSphereValue>(size));
    for (std::size_t i = 0; i < size; ++i) {
      b.e1_gram[i][i] = b.re_e1_norm_sq[i];
      for (std::size_t k = i + 1; k < size; ++k) {
        b.e1_gram[i][k] =
            inner_product_exact(b.elements[i].solid().component(1), b.elements[k].solid().component(1));
        b.e1_gram[k][i] = b.e1_gram[i][k];
      }
    }
  });
  return NormalizedBasis(std::move(blocks));
}

std::vector<std::vector<ScaledSqrt>> gram_sphere(const NormalizedBasis& basis, int n) {
  const auto& b = basis.block(n);
  const std::size_t size = b.elements.size();
  std::vector<std::vector<ScaledSqrt>> g(size, std::vector<ScaledSqrt>(size));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      const auto ip = inner_product_exact(b.elements[i].solid(), b.elements[j].solid());
      g[i][j] = {ip.coeff, Rational(b.norm_sq[i].coeff * b.norm_sq[j].coeff)};
    }
  return g;
}

std::vector<std::vector<ScaledSqrt>> gram_ball(const NormalizedBasis& basis, int n) {
  const auto& b = basis.block(n);
  const std::size_t size = b.elements.size();
  std::vector<std::vector<ScaledSqrt>> g(size, std::vector<ScaledSqrt>(size));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      const auto ip = inner_product_ball_exact(b.elements[i].solid(), b.elements[j].solid());
      g[i][j] = {Rational(ip.coeff * (2 * n + 3)), Rational(b.norm_sq[i].coeff * b.norm_sq[j].coeff)};
    }
  return g;
}

std::vector<std::vector<ExactSphereValue>> cross_gram_sphere(const NormalizedBasis& basis, int n, int k) {
  const auto& a = basis.block(n);
  const auto& b = basis.block(k);
  std::vector<std::vector<ExactSphereValue>> g(a.elements.size(), std::vector<ExactSphereValue>(b.elements.size()));
  for (std::size_t i = 0; i < a.elements.size(); ++i)
    for (std::size_t j = 0; j < b.elements.size(); ++j)
      g[i][j] = inner_product_exact(a.elements[i].solid(), b.elements[j].solid());
  return g;
}

bool is_identity(const std::vector<std::vector<ScaledSqrt>>& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g[i].size(); ++j)
      if (i == j ? !g[i][j].is_one() : !g[i][j].is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------

ExactSphereValue closed_form_norm_sq(const BasisIndex& idx) {
  const int n = idx.n, m = idx.m;
  if (idx.kind == MonogenicKind::X0) return {Rational(n + 1)};
  return {make_rational(n + 1, 2) * ratio(factorial(n + 1 + m), factorial(n + 1 - m))};
}

ExactSphereValue closed_form_re_norm_sq(const BasisIndex& idx) {
  const int n = idx.n, m = idx.m;
  if (idx.kind == MonogenicKind::X0) return {ratio((n + 1) * (n + 1), 2 * n + 1)};
  if (m == n + 1) return {Rational(0)};  // 1/(n-m)! = 1/Gamma(0) = 0
  return {Rational(1, 2) * ratio(n + 1 + m, 2 * n + 1) * ratio(factorial(n + 1 + m), factorial(n - m))};
}

ExactSphereValue closed_form_re_e1_norm_sq(int n) {
  return {make_rational(n + 1, 4) * Rational(factorial(2 * n + 2))};
}

// ---------------------------------------------------------------------------

FourierCoefficients FourierCoefficients::zeros(int max_degree) {
  FourierCoefficients c;
  c.max_degree = max_degree;
  c.values.resize(static_cast<std::size_t>(max_degree) + 1);
  for (int n = 1; n <= max_degree; ++n) c.values[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(2 * n + 3), 0.0);
  return c;
}

namespace {

std::size_t family_position(const BasisIndex& idx) {
  if (idx.kind == MonogenicKind::X0) return 0;
  if (idx.m < 1 || idx.m > idx.n + 1) throw std::out_of_range("coefficient order out of range");
  return static_cast<std::size_t>(2 * idx.m - 1 + (idx.kind == MonogenicKind::Y ? 1 : 0));
}

}  // namespace

double& FourierCoefficients::at(const BasisIndex& idx) {
  if (idx.n < 1 || idx.n > max_degree) throw std::out_of_range("FourierCoefficients::at: degree out of range");
  return values[static_cast<std::size_t>(idx.n)].at(family_position(idx));
}

double FourierCoefficients::at(const BasisIndex& idx) const { return const_cast<FourierCoefficients&>(*this).at(idx); }

RawCoefficients RawCoefficients::zeros(int max_degree) {
  RawCoefficients c;
  c.max_degree = max_degree;
  c.values.resize(static_cast<std::size_t>(max_degree) + 1);
  for (int n = 1; n <= max_degree; ++n) c.values[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(2 * n + 3), Rational(0));
  return c;
}

FourierCoefficients to_normalized(const RawCoefficients& raw, const NormalizedBasis& basis) {
  auto out = FourierCoefficients::zeros(raw.max_degree);
  out.f0 = {to_double(raw.f0.x0), to_double(raw.f0.x1), to_double(raw.f0.x2)};
  for (int n = 1; n <= raw.max_degree; ++n) {
    const auto& b = basis.block(n);
    const auto& src = raw.values[static_cast<std::size_t>(n)];
    auto& dst = out.values[static_cast<std::size_t>(n)];
    for (std::size_t k = 0; k < src.size(); ++k)
      dst[k] = to_double(src[k]) * std::sqrt(b.norm_sq[k].value()) / b.ball_weight();
  }
  return out;
}

QPolynomial synthesize(const RawCoefficients& coeffs, const NormalizedBasis& basis) {
  if (coeffs.max_degree > basis.max_degree()) throw std::invalid_argument("synthesize: basis degree too low");
  QPolynomial f = QPolynomial::constant(coeffs.f0.embed());
  for (int n = 1; n <= coeffs.max_degree; ++n) {
    const auto& b = basis.block(n);
    const auto& cs = coeffs.values[static_cast<std::size_t>(n)];
    for (std::size_t k = 0; k < cs.size(); ++k)
      if (cs[k] != 0) f += b.elements[k].solid() * cs[k];
  }
  return f;
}

QPolynomial synthesize(const FourierCoefficients& coeffs, const NormalizedBasis& basis) {
  if (coeffs.max_degree > basis.max_degree()) throw std::invalid_argument("synthesize: basis degree too low");
  auto raw = RawCoefficients::zeros(coeffs.max_degree);
  raw.f0 = {from_double(coeffs.f0.x0), from_double(coeffs.f0.x1), from_double(coeffs.f0.x2)};
  for (int n = 1; n <= coeffs.max_degree; ++n) {
    const auto& b = basis.block(n);
    const auto& src = coeffs.values[static_cast<std::size_t>(n)];
    auto& dst = raw.values[static_cast<std::size_t>(n)];
    // sqrt(2n+3) X^* alpha = X * (sqrt(2n+3) / ||X||) alpha
    for (std::size_t k = 0; k < src.size(); ++k)
      dst[k] = from_double(src[k] * b.ball_weight() * basis.inv_norm(n, k));
  }
  return synthesize(raw, basis);
}

ProjectionResult project(const QPolynomial& f, const NormalizedBasis& basis) {
  if (!f.is_reduced()) throw std::invalid_argument("project: input has a nonzero e3 component");
  const int degree = std::max(f.degree(), 0);
  if (degree > basis.max_degree()) throw std::invalid_argument("project: input degree exceeds the basis degree");

  ProjectionResult out;
  out.raw = RawCoefficients::zeros(degree);
  out.raw.f0 = ReducedQuaternion<Rational>::from(f.constant_term());
  for (int n = 1; n <= degree; ++n) {
    const QPolynomial part = f.homogeneous_part(n);
    if (part.is_zero()) continue;
    const auto& b = basis.block(n);
    auto& dst = out.raw.values[static_cast<std::size_t>(n)];
    for (std::size_t k = 0; k < b.elements.size(); ++k)
      dst[k] = inner_product_exact(part, b.elements[k].solid()).coeff / b.norm_sq[k].coeff;
  }
  out.coeffs = to_normalized(out.raw, basis);
  out.residual = f - synthesize(out.raw, basis);
  out.residual_ball_sq = inner_product_ball_exact(out.residual, out.residual);
  return out;
}

FourierCoefficients project_quad(const BoundarySampler& f, const NormalizedBasis& basis, const QuadratureRule& rule) {
  const int degree = f.degree;
  if (degree > basis.max_degree()) throw std::invalid_argument("project_quad: input degree exceeds the basis degree");
  rule.require_exact(2 * degree);
  auto out = FourierCoefficients::zeros(degree);

  const BoundarySampler one{[](const Point3&) { return Quaternion<double>(1.0); }, 0};
  const double area = 4.0 * std::numbers::pi;
  for (int i = 0; i < 3; ++i) {
    const BoundarySampler unit{[i](const Point3&) { return Quaternion<double>::unit(i); }, 0};
    const double mean = inner_product_quad(f, unit, rule) / area;
    (i == 0 ? out.f0.x0 : i == 1 ? out.f0.x1 : out.f0.x2) = mean;
  }
  for (int n = 1; n <= degree; ++n) {
    const auto& b = basis.block(n);
    auto& dst = out.values[static_cast<std::size_t>(n)];
    for (std::size_t k = 0; k < b.elements.size(); ++k) {
      const double ip = inner_product_quad(f, make_sampler(b.elements[k].solid()), rule);
      // alpha = <f, X> / ||X||^2 * ||X|| / sqrt(2n+3)
      dst[k] = ip * basis.inv_norm(n, k) / b.ball_weight();
    }
  }
  return out;
}

namespace {

FourierCoefficients recover(const SphereSamples& re_f, const SphereSamples& re_fe1, const NormalizedBasis& basis,
                            const QuadratureRule& rule, double f0_e2, bool correct_overlap) {
  const int degree = std::max(re_f.degree, re_fe1.degree);
  if (degree > basis.max_degree())
    throw std::invalid_argument("coeffs_from_real_part: sample degree exceeds the basis degree");
  rule.require_exact(2 * degree);
  auto out = FourierCoefficients::zeros(degree);

  const double area = 4.0 * std::numbers::pi;
  const SphereSamples one{std::vector<double>(rule.size(), 1.0), 0};
  out.f0 = {integrate_product(re_f, one, rule) / area, -integrate_product(re_fe1, one, rule) / area, f0_e2};

  for (int n = 1; n <= degree; ++n) {
    const auto& b = basis.block(n);
    auto& dst = out.values[static_cast<std::size_t>(n)];
    std::vector<double> raw(b.elements.size(), 0.0);
    // family order puts the two m = n+1 elements last
    for (std::size_t k = 0; k < b.elements.size(); ++k) {
      const CompiledQPolynomial x(b.elements[k].solid());
      SphereSamples basis_part{{}, n};
      basis_part.values.reserve(rule.size());
      const bool twisted = b.is_f2(k);
      for (const auto& p : rule.points()) {
        const auto v = x.eval(p);
        basis_part.values.push_back(twisted ? re(mul_unit_right(v, 1)) : re(v));
      }
      double integral = integrate_product(twisted ? re_fe1 : re_f, basis_part, rule);
      if (twisted && correct_overlap) {
        CompensatedSum leak;
        for (std::size_t j = 0; j < b.elements.size(); ++j)
          if (!b.is_f2(j)) leak.add(raw[j] * b.e1_gram[j][k].value());
        integral -= leak.value();
      }
      const ExactSphereValue& denom = twisted ? b.re_e1_norm_sq[k] : b.re_norm_sq[k];
      raw[k] = integral / denom.value();
      dst[k] = raw[k] * std::sqrt(b.norm_sq[k].value()) / b.ball_weight();
    }
  }
  return out;
}

}  // namespace

FourierCoefficients coeffs_from_real_part(const SphereSamples& re_f, const SphereSamples& re_fe1,
                                          const NormalizedBasis& basis, const QuadratureRule& rule, double f0_e2) {
  return recover(re_f, re_fe1, basis, rule, f0_e2, true);
}

FourierCoefficients coeffs_from_real_part_uncorrected(const SphereSamples& re_f, const SphereSamples& re_fe1,
                                                      const NormalizedBasis& basis, const QuadratureRule& rule,
                                                      double f0_e2) {
  return recover(re_f, re_fe1, basis, rule, f0_e2, false);
}

std::pair<SphereSamples, SphereSamples> real_part_samples(const QPolynomial& f, const QuadratureRule& rule) {
  const auto sampler = make_sampler(f);
  return {sample(rule, sampler, [](const Quaternion<double>& q) { return re(q); }),
          sample(rule, sampler, [](const Quaternion<double>& q) { return re(mul_unit_right(q, 1)); })};
}

double max_abs_difference(const FourierCoefficients& a, const FourierCoefficients& b) {
  double d = std::max({std::abs(a.f0.x0 - b.f0.x0), std::abs(a.f0.x1 - b.f0.x1), std::abs(a.f0.x2 - b.f0.x2)});
  const int top = std::max(a.max_degree, b.max_degree);
  for (int n = 1; n <= top; ++n) {
    for (std::size_t k = 0; k < static_cast<std::size_t>(2 * n + 3); ++k) {
      const double va = n <= a.max_degree ? a.values[static_cast<std::size_t>(n)][k] : 0.0;
      const double vb = n <= b.max_degree ? b.values[static_cast<std::size_t>(n)][k] : 0.0;
      d = std::max(d, std::abs(va - vb));
    }
  }
  return d;
}

}  // namespace monoball
