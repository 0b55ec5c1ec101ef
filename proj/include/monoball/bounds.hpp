#pragma once

/**
 * Growth bound for A-valued monogenic functions in terms of their real part.
 *
 * For 0 <= r < 1/2 and |x| = r:
 *
 *   |f(x)| <= |f(0)| + (1/2) ||Re f|| S1(r) + 3 ||Re(f e1)|| S2(r)      (series form)
 *   S1(r) = sum_{n>=1} (2r)^n (n+1)(n+2)(2n+1),  S2(r) = sum_{n>=1} (2r)^n (n+1)
 *
 *   |f(x)| <= |f(0)| + 4r/(2r-1)^2 ( ||Re f|| A1(r) + ||Re(f e1)|| A2(r) )  (closed form)
 *   A1(r) = (3(3-4r) + 8r^2(2-r)) / (2r-1)^2,  A2(r) = 3(1-r)
 *
 * Norms are L2 norms over the unit sphere. Both forms are always reported.
 * The series form is the one backed by the coefficient estimates and is
 * used for pass/fail; the closed form is reported next to it.
 */

#include <cstdint>
#include <random>
#include <vector>

#include "monoball/fourier.hpp"
#include "monoball/integrate.hpp"
#include "monoball/poly3.hpp"

namespace monoball {

/// Throws std::domain_error unless 0 <= r < 1/2.
void require_radius(double r);

double a1(double r);
double a2(double r);
/// 4r / (2r-1)^2
double closed_form_prefactor(double r);

/// (1/2) sum_{n>=1} (2r)^n (n+1)(n+2)(2n+1), summed until the tail bound is below tol.
double series_part1(double r, double tol = 1e-12);
/// 3 sum_{n>=1} (2r)^n (n+1)
double series_part2(double r, double tol = 1e-12);

/// re_norm * series_part1 + re_e1_norm * series_part2 (the |f(0)|-free part).
double rhs_series(double r, double re_norm, double re_e1_norm, double tol = 1e-12);
/// The |f(0)|-free part of the closed form.
double rhs_closed(double r, double re_norm, double re_e1_norm);

/// closed-form f1 part / series f1 part: 4r/(2r-1)^2 A1(r) / series_part1(r). Undefined at r = 0.
double a1_closed_to_series_ratio(double r, double tol = 1e-12);

// ---------------------------------------------------------------------------

struct CoefficientBoundEntry {
  BasisIndex index;
  double lhs = 0.0;  // sqrt(2n+3) |coefficient|
  double rhs = 0.0;
  double slack() const { return rhs - lhs; }
};

struct CoefficientBoundReport {
  double re_norm = 0.0;
  double re_e1_norm = 0.0;
  std::vector<CoefficientBoundEntry> entries;
  double min_slack = 0.0;  // +inf style large value when no entries
  bool holds(double abs_tol = 1e-12) const { return min_slack >= -abs_tol; }
};

/// Checks sqrt(2n+3)|coefficient| <= ||X|| / ||Re X|| ||Re f|| for m <= n and
/// the e1-twisted version for m = n+1, with coefficients from the exact projection.
CoefficientBoundReport coefficient_bounds_check(const QPolynomial& f, const NormalizedBasis& basis);

// ---------------------------------------------------------------------------

struct MaxEstimateOptions {
  int n_theta = 181;  // theta_i = i pi / (n_theta - 1), poles included
  int n_phi = 360;
  int refine_rounds = 8;
  int refine_points = 64;
};

/**
 * Lower estimate of max |f| over the sphere of radius r: equiangular grid
 * followed by golden-ratio jittered refinement around the grid argmax.
 * Grid values of each homogeneous part are cached, so evaluating many radii
 * costs one pass over the grid per radius.
 */
class SphereMaxEstimator {
 public:
  SphereMaxEstimator(const QPolynomial& f, MaxEstimateOptions options = {});
  double max_abs(double r) const;

 private:
  double value_at(double r, double theta, double phi) const;

  CompiledQPolynomial compiled_;
  MaxEstimateOptions options_;
  int degree_ = 0;
  std::vector<double> thetas_, phis_;
  // per grid point, per degree: quaternion components (4 doubles)
  std::vector<double> cache_;
};

struct BoundReport {
  double r = 0.0;
  double max_f = 0.0;
  double f0_abs = 0.0;
  double re_norm = 0.0;
  double re_e1_norm = 0.0;
  double rhs_series = 0.0;
  double rhs_closed = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  bool pass_series = false;
  bool pass_closed = false;
  // f(0) = 0 and ||Re f|| A1 + ||Re(f e1)|| A2 <= 4/(2r-1)^2
  bool schwarz_hypothesis = false;
  bool schwarz_counterexample = false;  // hypothesis holds and max_f > r
  // same with the threshold (2r-1)^2/4, which is what the closed form supports
  bool schwarz_alt_hypothesis = false;
  bool schwarz_alt_counterexample = false;
};

inline constexpr double kBoundSlack = 1e-9;

struct CertifyOptions {
  MaxEstimateOptions max_estimate;
  double series_tol = 1e-12;
};

/// One report per radius, in input order. f must be A-valued.
std::vector<BoundReport> certify(const QPolynomial& f, const std::vector<double>& r_grid, const QuadratureRule& rule,
                                 const CertifyOptions& options = {});

// ---------------------------------------------------------------------------

/// Deterministic uniform doubles in [lo, hi) from a 64-bit Mersenne twister,
/// using the top 53 bits so results do not depend on the standard library.
class UniformSource {
 public:
  explicit UniformSource(std::uint64_t seed) : engine_(seed) {}
  double operator()(double lo, double hi);

 private:
  std::mt19937_64 engine_;
};

struct RandomMonogenicOptions {
  int max_degree = 6;
  double lo = -1.0;
  double hi = 1.0;
  bool zero_f0 = false;
};

/// Coefficients (and f(0) components) drawn uniformly from [lo, hi).
FourierCoefficients random_coefficients(UniformSource& rng, const RandomMonogenicOptions& options);

}  // namespace monoball
