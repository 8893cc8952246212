#pragma once

#include <random>

#include "chebmom/polynomial.hpp"
#include "chebmom/rational.hpp"

// shared test utilities

namespace testutil {

using chebmom::BigInt;
using chebmom::IntPolynomial;
using chebmom::Rational;

// random rational strictly inside (0, 1); mt19937_64 is fully specified by
// the standard, so sequences are identical everywhere
inline Rational random_unit_rational(std::mt19937_64& gen, int max_den = 1000) {
  std::uniform_int_distribution<int> den_dist(2, max_den);
  const int den = den_dist(gen);
  std::uniform_int_distribution<int> num_dist(1, den - 1);
  return Rational(num_dist(gen), den);
}

// poly evaluated at (1 - p), as a polynomial (Horner with polynomial argument)
inline IntPolynomial compose_one_minus_p(const IntPolynomial& poly) {
  const IntPolynomial arg = IntPolynomial::from_ints({1, -1});
  IntPolynomial acc;
  const auto& c = poly.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * arg + IntPolynomial::monomial(c[i], 0);
  }
  return acc;
}

}  // namespace testutil
