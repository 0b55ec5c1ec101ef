#pragma once

// Exact identity suite used by the `verify` command.

#include <cstdint>
#include <string>
#include <vector>

#include "monoball/bounds.hpp"
#include "monoball/fourier.hpp"

namespace monoball {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;  // first failure, or a short summary
};

/// Runs every check for degrees 0..max_degree. The basis must cover max_degree.
/// `seed` drives the random polynomials of the factorization check.
std::vector<CheckResult> run_verification(const NormalizedBasis& basis, int max_degree, std::uint64_t seed);

/// Random polynomial of total degree <= max_degree with small integer
/// coefficients in [-range, range] and roughly `density` of the monomials present.
Poly3 random_poly3(UniformSource& rng, int max_degree, int range = 5, double density = 0.5);

}  // namespace monoball
