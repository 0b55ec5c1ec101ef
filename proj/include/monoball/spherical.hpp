#pragma once

/**
 * Solid spherical harmonics and the spherical monogenics built from them.
 *
 * For n >= 0 and 0 <= m <= n+1 the solid harmonics r^{n+1} U^m_{n+1} and
 * r^{n+1} V^m_{n+1} are exact real polynomials of degree n+1. Applying
 * (1/2) Dbar gives homogeneous monogenic polynomials of degree n with values
 * in A:
 *
 *     X^0_n   from U^0_{n+1}
 *     X^m_n   from U^m_{n+1},  m = 1..n+1
 *     Y^m_n   from V^m_{n+1},  m = 1..n+1
 *
 * Each element also has a closed trigonometric form in (theta, phi) with
 * coefficients A^{m,n}, B^{m,n}, C^{m,n}. The polynomial form is the
 * reference; the trigonometric form is an independent cross-check.
 *
 * Spherical coordinates: x0 = r cos(theta), x1 = r sin(theta) cos(phi),
 * x2 = r sin(theta) sin(phi).
 */

#include <string>
#include <string_view>
#include <vector>

#include "monoball/legendre.hpp"
#include "monoball/poly3.hpp"
#include "monoball/quaternion.hpp"

namespace monoball {

struct SphericalPoint {
  double theta = 0.0;
  double phi = 0.0;
  double r = 1.0;

  Point3 to_cartesian() const;
  static SphericalPoint from_cartesian(const Point3& x);
};

enum class HarmonicKind { U, V };
enum class MonogenicKind { X0, X, Y };

std::string_view to_string(MonogenicKind k);
MonogenicKind monogenic_kind_from_string(std::string_view s);

/// Position of an element within the degree-n family.
struct BasisIndex {
  int n = 0;
  MonogenicKind kind = MonogenicKind::X0;
  int m = 0;  // 0 for X0

  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

/// r^{n+1} U^m_{n+1} or r^{n+1} V^m_{n+1} as an exact polynomial.
Poly3 solid_harmonic(int n_plus_1, int m, HarmonicKind kind);

class MonogenicBasisElement {
 public:
  MonogenicBasisElement(int n, MonogenicKind kind, int m);

  int degree() const { return index_.n; }
  MonogenicKind kind() const { return index_.kind; }
  int order() const { return index_.m; }
  const BasisIndex& index() const { return index_; }

  /// r^n times the spherical monogenic, homogeneous of degree n.
  const QPolynomial& solid() const { return solid_; }

  /// Closed trigonometric form on the unit sphere.
  Quaternion<double> eval_trig(double theta, double phi) const;
  Quaternion<double> eval_trig(const SphericalPoint& p) const { return eval_trig(p.theta, p.phi); }

  struct TrigCoefficients {
    double a, b, c;
  };
  TrigCoefficients trig_coefficients(double theta) const;

 private:
  BasisIndex index_;
  AssocLegendre legendre_;
  QPolynomial solid_;
};

MonogenicBasisElement spherical_monogenic(int n, int m, MonogenicKind kind);

/// All 2n+3 elements of degree n, ordered X0, X1, Y1, X2, Y2, ..., X_{n+1}, Y_{n+1}.
std::vector<MonogenicBasisElement> monogenic_family(int n);
std::vector<BasisIndex> family_indices(int n);

/// Pointwise upper bound for |r^n X|/r^n on the sphere.
double pointwise_bound(int n, int m, MonogenicKind kind);

struct PointwiseBoundResult {
  double bound = 0.0;
  double max_value = 0.0;
  double worst_margin = 0.0;  // bound - max_value
  bool holds() const { return worst_margin >= 0.0; }
  double ratio() const { return max_value / bound; }
};

PointwiseBoundResult pointwise_bound_check(const MonogenicBasisElement& e, const std::vector<Point3>& samples);

/// theta-major equiangular grid: theta_i = pi (i + 1/2) / n_theta, phi_j = 2 pi j / n_phi.
std::vector<Point3> sphere_grid(int n_theta, int n_phi);

}  // namespace monoball
