#include "monoball/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace monoball {

Integer factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer double_factorial(long n) {
  if (n < -1) throw std::domain_error("double_factorial: argument below -1");
  if (n <= 0) return 1;
  Integer out;
  mpz_2fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Rational from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("from_double: non-finite value");
  return Rational(x);
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace monoball
