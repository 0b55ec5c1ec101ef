#pragma once

// Helpers shared by the test binaries: seeded random rationals and small
// independent oracles that do not go through the library code under test.

#include <cstdint>
#include <random>

#include "monoball/quaternion.hpp"
#include "monoball/rational.hpp"

namespace testing_support {

using monoball::Rational;

class RandomRationals {
 public:
  explicit RandomRationals(std::uint64_t seed) : engine_(seed) {}

  Rational next(long range = 9, long max_den = 7) {
    std::uniform_int_distribution<long> num(-range, range);
    std::uniform_int_distribution<long> den(1, max_den);
    return monoball::make_rational(num(engine_), den(engine_));
  }
  monoball::Quaternion<Rational> quaternion() { return {next(), next(), next(), next()}; }
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// n! as a Rational, by repeated multiplication.
inline Rational fact(long n) {
  Rational r = 1;
  for (long k = 2; k <= n; ++k) r *= k;
  return r;
}

/// n!! as a Rational, with (-1)!! = 0!! = 1.
inline Rational dfact(long n) {
  Rational r = 1;
  for (long k = n; k > 1; k -= 2) r *= k;
  return r;
}

}  // namespace testing_support
