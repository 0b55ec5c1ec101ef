#pragma once

// Exact rational scalars backed by GMP, plus the few combinatorial helpers
// (factorials, double factorials) the closed-form identities need.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace monoball {

using Rational = mpq_class;
using Integer = mpz_class;

/// n! for n >= 0.
Integer factorial(long n);

/// n!! with the conventions 0!! = (-1)!! = 1. Throws for n < -1.
Integer double_factorial(long n);

/// Explicit rational -> binary64 conversion. Never implicit.
inline double to_double(const Rational& q) { return q.get_d(); }

/// Exact rational value of a finite double.
Rational from_double(double x);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// a / b in canonical form.
inline Rational ratio(const Integer& a, const Integer& b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q);

}  // namespace monoball
