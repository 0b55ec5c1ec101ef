#include "monoball/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "monoball/legendre.hpp"

namespace monoball {

namespace {

std::string label(const BasisIndex& idx) {
  std::ostringstream os;
  os << to_string(idx.kind) << "(n=" << idx.n << ",m=" << idx.m << ")";
  return os.str();
}

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::string& what) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = what;
    }
  }
  void summary(std::string s) {
    if (result_.passed) result_.detail = std::move(s);
  }
  CheckResult done() { return std::move(result_); }

 private:
  CheckResult result_;
};

CheckResult check_monogenic(const NormalizedBasis& basis, int max_degree) {
  Check c("monogenicity");
  for (int n = 0; n <= max_degree; ++n) {
    const auto& b = basis.block(n);
    c.expect(b.elements.size() == static_cast<std::size_t>(2 * n + 3), "family size at n=" + std::to_string(n));
    for (const auto& e : b.elements) {
      const auto& p = e.solid();
      c.expect(is_monogenic(p), "D X != 0 for " + label(e.index()));
      c.expect(p.is_homogeneous(n) && !p.is_zero(), "not homogeneous of degree n: " + label(e.index()));
      c.expect(p.is_reduced(), "nonzero e3 part: " + label(e.index()));
    }
  }
  c.summary("D X = 0, homogeneous, A-valued, 2n+3 elements per degree");
  return c.done();
}

CheckResult check_factorization(int max_degree, std::uint64_t seed) {
  Check c("laplacian factorization");
  UniformSource rng(seed);
  const int degree = std::max(max_degree, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const QPolynomial p(random_poly3(rng, degree), random_poly3(rng, degree), random_poly3(rng, degree),
                        random_poly3(rng, degree));
    const auto lap = laplacian(p);
    c.expect(apply_D(apply_Dbar(p)) == lap, "D Dbar p != laplacian p (trial " + std::to_string(trial) + ")");
    c.expect(apply_Dbar(apply_D(p)) == lap, "Dbar D p != laplacian p (trial " + std::to_string(trial) + ")");
  }
  c.summary("D Dbar = Dbar D = laplacian on 20 random polynomials");
  return c.done();
}

CheckResult check_legendre(int max_degree) {
  Check c("associated Legendre identities");
  for (int n = 0; n <= max_degree; ++n) {
    for (int m = 0; m <= n + 1; ++m) {
      const std::string at = " (n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")";
      c.expect(check_recurrence(n + 1, m), "recurrence" + at);
      c.expect(l2_norm_sq(n + 1, m).matches(), "L2 norm" + at);
    }
  }
  for (int m = 0; m <= max_degree + 1; ++m) c.expect(check_sectoral_identity(m), "P^m_m, m=" + std::to_string(m));
  c.summary("recurrence, sectoral identity and L2 norms exact");
  return c.done();
}

CheckResult check_norms(const NormalizedBasis& basis, int max_degree) {
  Check c("closed-form norms");
  for (int n = 0; n <= max_degree; ++n) {
    const auto& b = basis.block(n);
    for (std::size_t k = 0; k < b.elements.size(); ++k) {
      const auto& idx = b.elements[k].index();
      c.expect(b.norm_sq[k] == closed_form_norm_sq(idx), "||X||^2 " + label(idx));
      c.expect(b.re_norm_sq[k] == closed_form_re_norm_sq(idx), "||Re X||^2 " + label(idx));
      if (n >= 1 && b.is_f2(k))
        c.expect(b.re_e1_norm_sq[k] == closed_form_re_e1_norm_sq(n), "||Re(X e1)||^2 " + label(idx));
    }
  }
  c.summary("||X||^2, ||Re X||^2 and ||Re(X e1)||^2 (n >= 1) match closed forms");
  return c.done();
}

// Re(X) for m <= n pairwise orthogonal; Re(X e1) and Re(Y e1) for m = n+1
// orthogonal to each other. Across degrees both real parts are orthogonal for
// every pair of elements.
CheckResult check_real_part_orthogonality(const NormalizedBasis& basis, int max_degree) {
  Check c("real-part orthogonality");
  for (int n = 0; n <= max_degree; ++n) {
    const auto& b = basis.block(n);
    const std::size_t size = b.elements.size();
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = i + 1; j < size; ++j) {
        const auto& pi = b.elements[i].solid();
        const auto& pj = b.elements[j].solid();
        const std::string pair = label(b.elements[i].index()) + " vs " + label(b.elements[j].index());
        if (!b.is_f2(i) && !b.is_f2(j))
          c.expect(inner_product_exact(pi.component(0), pj.component(0)).coeff == 0, "<Re X, Re X'> " + pair);
        if (b.is_f2(i) && b.is_f2(j))
          c.expect(b.e1_gram[i][j].coeff == 0, "<Re Xe1, Re Ye1> " + pair);
      }
    }
    for (int k = n + 1; k <= max_degree; ++k)
      for (const auto& ei : b.elements)
        for (const auto& ek : basis.block(k).elements) {
          const std::string pair = label(ei.index()) + " vs " + label(ek.index());
          c.expect(inner_product_exact(ei.solid().component(0), ek.solid().component(0)).coeff == 0,
                   "<Re X, Re X'> across degrees " + pair);
          // Re(X e1) = -X_1
          c.expect(inner_product_exact(ei.solid().component(1), ek.solid().component(1)).coeff == 0,
                   "<Re Xe1, Re X'e1> across degrees " + pair);
        }
  }
  c.summary("exact zero inner products, within and across degrees");
  return c.done();
}

// The m <= n elements are not orthogonal to the m = n+1 ones after the e1
// twist. Recovery corrects for it; this row reports where the overlap is
// nonzero and fails only if it appears outside m = n-1 (or the X0 case n = 1).
CheckResult check_e1_overlap(const NormalizedBasis& basis, int max_degree) {
  Check c("e1-twisted overlap (m = n-1 only)");
  std::size_t nonzero = 0;
  for (int n = 0; n <= max_degree; ++n) {
    const auto& b = basis.block(n);
    for (std::size_t i = 0; i < b.elements.size(); ++i) {
      if (b.is_f2(i)) continue;
      for (std::size_t k = 0; k < b.elements.size(); ++k) {
        if (!b.is_f2(k)) continue;
        const bool zero = b.e1_gram[i][k].coeff == 0;
        nonzero += !zero;
        c.expect(zero || b.elements[i].order() == n - 1,
                 "unexpected overlap " + label(b.elements[i].index()) + " vs " + label(b.elements[k].index()));
      }
    }
  }
  c.summary(std::to_string(nonzero) + " nonzero pairs, all with m = n-1");
  return c.done();
}

CheckResult check_gram(const NormalizedBasis& basis, int max_degree) {
  Check c("orthonormality");
  for (int n = 0; n <= max_degree; ++n) {
    c.expect(is_identity(gram_sphere(basis, n)), "sphere Gram at n=" + std::to_string(n));
    c.expect(is_identity(gram_ball(basis, n)), "ball Gram at n=" + std::to_string(n));
    for (int k = n + 1; k <= max_degree; ++k) {
      const auto g = cross_gram_sphere(basis, n, k);
      bool zero = true;
      for (const auto& row : g)
        for (const auto& v : row) zero = zero && v.coeff == 0;
      c.expect(zero, "cross-degree block " + std::to_string(n) + "," + std::to_string(k));
    }
  }
  c.summary("sphere and ball Gram matrices are the identity; degrees mutually orthogonal");
  return c.done();
}

CheckResult check_pointwise(const NormalizedBasis& basis, int max_degree) {
  Check c("pointwise bounds");
  const auto grid = sphere_grid(60, 120);
  double worst_ratio = 0.0;
  for (int n = 0; n <= max_degree; ++n) {
    for (const auto& e : basis.block(n).elements) {
      const auto r = pointwise_bound_check(e, grid);
      worst_ratio = std::max(worst_ratio, r.ratio());
      c.expect(r.holds(), "bound exceeded for " + label(e.index()));
    }
  }
  std::ostringstream os;
  os << "largest max/bound ratio " << worst_ratio;
  c.summary(os.str());
  return c.done();
}

CheckResult check_trig_path(const NormalizedBasis& basis, int max_degree) {
  Check c("trigonometric form");
  const int n_theta = 41, n_phi = 40;
  for (int n = 0; n <= max_degree; ++n) {
    for (const auto& e : basis.block(n).elements) {
      const CompiledQPolynomial poly(e.solid());
      const double scale = std::max(1.0, pointwise_bound(n, e.order(), e.kind()));
      double worst = 0.0;
      for (int i = 0; i < n_theta; ++i) {
        const double theta = std::numbers::pi * i / (n_theta - 1);
        for (int j = 0; j < n_phi; ++j) {
          const SphericalPoint p{theta, 2.0 * std::numbers::pi * j / n_phi};
          worst = std::max(worst, norm(e.eval_trig(p) - poly.eval(p.to_cartesian())));
        }
      }
      c.expect(worst <= 1e-12 * scale, "trig and polynomial values differ for " + label(e.index()));
    }
  }
  c.summary("agrees with the polynomial form, poles included");
  return c.done();
}

}  // namespace

Poly3 random_poly3(UniformSource& rng, int max_degree, int range, double density) {
  Poly3 p;
  for (int d = 0; d <= max_degree; ++d)
    for (int a = d; a >= 0; --a)
      for (int b = d - a; b >= 0; --b) {
        if (rng(0.0, 1.0) >= density) continue;
        const long c = static_cast<long>(std::floor(rng(-range, range + 1.0)));
        p.add_term({a, b, d - a - b}, Rational(c));
      }
  return p;
}

std::vector<CheckResult> run_verification(const NormalizedBasis& basis, int max_degree, std::uint64_t seed) {
  if (max_degree > basis.max_degree()) throw std::invalid_argument("run_verification: basis too small");
  return {check_monogenic(basis, max_degree),
          check_factorization(max_degree, seed),
          check_legendre(max_degree),
          check_norms(basis, max_degree),
          check_real_part_orthogonality(basis, max_degree),
          check_e1_overlap(basis, max_degree),
          check_gram(basis, max_degree),
          check_pointwise(basis, max_degree),
          check_trig_path(basis, max_degree)};
}

}  // namespace monoball
