#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "chebmom/combinatorics.hpp"
#include "chebmom/errors.hpp"
#include "chebmom/rational.hpp"

// Even central moments E S_n^{2m}(p) of the centered binomial sum
// S_n(p) = sum_{j<=n} (X_j - p), X_j iid Bernoulli(p), by several independent
// exact routes that must agree term for term.

namespace chebmom {

enum class MomentMethod { composition, binomsum, recurrence, bruteforce, general };

inline const char* to_string(MomentMethod m) {
  switch (m) {
    case MomentMethod::composition: return "composition";
    case MomentMethod::binomsum: return "binomsum";
    case MomentMethod::recurrence: return "recurrence";
    case MomentMethod::bruteforce: return "bruteforce";
    case MomentMethod::general: return "general";
  }
  return "?";
}

struct MomentValue {
  int n = 0;
  int m = 0;           // half the moment order: the moment is E S_n^{2m}
  Rational p;
  Rational value;
  MomentMethod method = MomentMethod::binomsum;
};

namespace detail {

inline void require_nm(int n, int m) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
}

inline void require_unit_interval(const Rational& p) {
  if (p < 0 || p > 1) throw std::invalid_argument("p must lie in [0, 1]");
}

}  // namespace detail

// f_i(mu, p) = p q^{mu_i} + q (-p)^{mu_i}, the per-part factor of the
// composition expansion. Identically zero for mu_i = 1.
inline Rational f_term(int mu_i, const Rational& p) {
  if (mu_i < 1) throw std::invalid_argument("mu_i must be >= 1");
  detail::require_unit_interval(p);
  const Rational q = 1 - p;
  return p * rpow(q, static_cast<unsigned>(mu_i)) + q * rpow(-p, static_cast<unsigned>(mu_i));
}

// d/dp f_i(mu, p) = q^{mu_i}(1 - (p/q) mu_i) + (-1)^{mu_i+1} p^{mu_i}(1 - (q/p) mu_i).
// This form divides by p and q, so the endpoints are rejected; the polynomial
// machinery covers those.
inline Rational f_term_derivative(int mu_i, const Rational& p) {
  if (mu_i < 1) throw std::invalid_argument("mu_i must be >= 1");
  if (p <= 0 || p >= 1) throw std::invalid_argument("f_term_derivative needs 0 < p < 1");
  const Rational q = 1 - p;
  const Rational mu(mu_i);
  const Rational even_part = rpow(q, static_cast<unsigned>(mu_i)) * (1 - p / q * mu);
  const Rational odd_part = rpow(p, static_cast<unsigned>(mu_i)) * (1 - q / p * mu);
  return (mu_i % 2 == 0) ? Rational(even_part - odd_part) : Rational(even_part + odd_part);
}

// E S_n^{2m}(1/2) = 4^{-m} sum over compositions mu of m with |mu| <= min(m,n)
// of binom(2m; 2mu_1,...,2mu_k) binom(n,|mu|). Compositions with more than n
// parts contribute nothing and are filtered, which is the empty-sum convention.
inline MomentValue moment_half_composition(int n, int m) {
  detail::require_nm(n, m);
  BigInt sum(0);
  for_each_composition(m, [&](const std::vector<int>& mu) {
    const int k = static_cast<int>(mu.size());
    if (k > n) return;
    std::vector<int> doubled(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) doubled[i] = 2 * mu[i];
    sum += multinomial(2 * m, doubled) * binomial(n, k);
  });
  return MomentValue{n, m, Rational(1, 2), Rational(sum, ipow(4, static_cast<unsigned>(m))),
                     MomentMethod::composition};
}

// E S_n^{2m}(1/2) = 2^{-2m-n} sum_k binom(n,k) (2k-n)^{2m}. The default route:
// an O(n) loop with no combinatorial blowup in m.
inline MomentValue moment_half_binomsum(int n, int m) {
  detail::require_nm(n, m);
  BigInt sum(0);
  BigInt binom(1);  // binom(n, k), updated incrementally
  for (int k = 0; k <= n; ++k) {
    const BigInt dev(std::abs(2LL * k - n));
    sum += binom * ipow(dev, static_cast<unsigned>(2 * m));
    binom *= n - k;
    binom /= k + 1;
  }
  return MomentValue{n, m, Rational(1, 2), Rational(sum, ipow(2, static_cast<unsigned>(2 * m + n))),
                     MomentMethod::binomsum};
}

// E S_n^{2m}(p) straight from the distribution of the count:
// sum_k binom(n,k) p^k q^{n-k} (k - np)^{2m}.
inline MomentValue moment_general(int n, int m, const Rational& p) {
  detail::require_nm(n, m);
  detail::require_unit_interval(p);
  MomentValue out{n, m, p, Rational(0), MomentMethod::general};
  if (p == 0 || p == 1) return out;  // S_n is almost surely 0

  const Rational q = 1 - p;
  const Rational np = Rational(n) * p;
  Rational weight = rpow(q, static_cast<unsigned>(n));  // binom(n,k) p^k q^{n-k}
  BigInt binom(1);
  Rational sum(0);
  for (int k = 0; k <= n; ++k) {
    sum += Rational(binom) * weight * rpow(Rational(k) - np, static_cast<unsigned>(2 * m));
    binom *= n - k;
    binom /= k + 1;
    weight *= p;
    weight /= q;
  }
  out.value = sum;
  return out;
}

// Composition-expansion route for general p:
// sum over compositions mu of 2m of binom(n,|mu|) binom(2m; mu) prod_i f_i(mu,p).
// Exponential in m; kept as a verification path for the default route above.
inline Rational moment_general_composition(int n, int m, const Rational& p) {
  detail::require_nm(n, m);
  detail::require_unit_interval(p);
  Rational sum(0);
  for_each_composition(2 * m, [&](const std::vector<int>& mu) {
    const int k = static_cast<int>(mu.size());
    if (k > n) return;
    Rational prod(1);
    for (int part : mu) {
      prod *= f_term(part, p);
      if (prod == 0) break;
    }
    if (prod == 0) return;
    sum += Rational(binomial(n, k) * multinomial(2 * m, mu)) * prod;
  });
  return sum;
}

// Hard cap on the 2^n outcome enumeration below.
inline constexpr int kBruteForceMaxN = 20;

// Independent oracle: enumerates all 2^n outcome tuples x in {0,1}^n and sums
// p^{#ones} q^{#zeros} (sum_j (x_j - p))^{2m} directly. Never touches binomial
// coefficients, so it shares no code path with the formula routes.
inline MomentValue moment_bruteforce(int n, int m, const Rational& p) {
  detail::require_nm(n, m);
  detail::require_unit_interval(p);
  if (n > kBruteForceMaxN)
    throw ResourceLimitError("moment_bruteforce: n = " + std::to_string(n) +
                             " exceeds the enumeration cap of " +
                             std::to_string(kBruteForceMaxN));
  const Rational q = 1 - p;
  // per-count tables; the enumeration below still walks every tuple
  std::vector<Rational> weight_by_ones(static_cast<std::size_t>(n) + 1);
  std::vector<Rational> dev_by_ones(static_cast<std::size_t>(n) + 1);
  for (int ones = 0; ones <= n; ++ones) {
    weight_by_ones[ones] =
        rpow(p, static_cast<unsigned>(ones)) * rpow(q, static_cast<unsigned>(n - ones));
    dev_by_ones[ones] =
        rpow(Rational(ones) - Rational(n) * p, static_cast<unsigned>(2 * m));
  }
  Rational sum(0);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int ones = __builtin_popcount(mask);
    sum += weight_by_ones[ones] * dev_by_ones[ones];
  }
  return MomentValue{n, m, p, sum, MomentMethod::bruteforce};
}

// E Z^{2m} = 2^{-m} (2m)!/m! for standard normal Z.
inline Rational gaussian_even_moment(int m) {
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  return Rational(factorial(2 * m), ipow(2, static_cast<unsigned>(m)) * factorial(m));
}

}  // namespace chebmom
