#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chebmom/rational.hpp"

namespace chebmom {

inline BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  BigInt r(1);
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// binom(n, k) via the product form with stepwise exact division.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return BigInt(0);
  if (2 * k > n) k = n - k;
  BigInt r(1);
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

// total! / (parts_1! ... parts_k!), computed as a product of binomials so no
// single factorial is ever materialized.
inline BigInt multinomial(int total, const std::vector<int>& parts) {
  long long sum = 0;
  for (int part : parts) {
    if (part < 0) throw std::invalid_argument("multinomial: negative part");
    sum += part;
  }
  if (sum != total) throw std::invalid_argument("multinomial: parts must sum to total");
  BigInt r(1);
  int running = 0;
  for (int part : parts) {
    running += part;
    r *= binomial(running, part);
  }
  return r;
}

// Ordered partition of `total` into positive parts.
struct Composition {
  std::vector<int> parts;
  int total = 0;

  int size() const { return static_cast<int>(parts.size()); }
};

// Visits every composition of m in lexicographic order by parts, reusing a
// single buffer. 2^(m-1) compositions, O(m) memory.
template <typename Visitor>
void for_each_composition(int m, Visitor&& visit) {
  if (m < 1) throw std::invalid_argument("compositions require m >= 1");
  std::vector<int> buf(static_cast<std::size_t>(m), 1);
  for (;;) {
    visit(const_cast<const std::vector<int>&>(buf));
    if (buf.size() == 1) break;
    // successor: merge the last part into its neighbour, then pad with ones
    int last = buf.back();
    buf.pop_back();
    buf.back() += 1;
    buf.insert(buf.end(), static_cast<std::size_t>(last - 1), 1);
  }
}

inline std::vector<Composition> enumerate_compositions(int m) {
  std::vector<Composition> out;
  for_each_composition(m, [&](const std::vector<int>& parts) {
    out.push_back(Composition{parts, m});
  });
  return out;
}

}  // namespace chebmom
