#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "chebmom/rational.hpp"

// Seeded Monte Carlo estimate of the tail probability, as a statistical
// cross-check of the exact oracle. The only place in the library where
// floating point appears.

namespace chebmom {

namespace detail {

// splitmix64: Steele, Lea & Flood's 64-bit mixer. Small state, passes
// standard statistical batteries, and fully portable: the same seed gives the
// same stream on every platform.
struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

// stream for replicate i: finalize (seed, i) through one extra mixing round,
// so replicate randomness depends only on (seed, index), not on any schedule
inline std::uint64_t replicate_stream_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g{seed ^ (0xBF58476D1CE4E5B9ULL * (index + 1))};
  return g.next();
}

}  // namespace detail

struct McTailResult {
  double estimate = 0.0;
  double standard_error = 0.0;
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
};

// Estimates P(|S_n(p)/n| > eps) from `samples` replicates of n Bernoulli(p)
// draws each. The event |k - np| > n eps is evaluated in exact rational
// arithmetic (so boundary lattice cases agree with exact_tail); only the
// Bernoulli draws themselves are floating point. Deterministic given
// (seed, samples, n, p, eps).
inline McTailResult mc_tail(int n, const Rational& p, const Rational& epsilon,
                            std::uint64_t samples, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (p < 0 || p > 1) throw std::invalid_argument("p must lie in [0, 1]");
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be > 0");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");

  // exact event set over the count k
  std::vector<bool> in_event(static_cast<std::size_t>(n) + 1);
  const Rational np = Rational(n) * p;
  const Rational neps = Rational(n) * epsilon;
  for (int k = 0; k <= n; ++k) in_event[k] = rabs(Rational(k) - np) > neps;

  // Bernoulli threshold on 64-bit uniforms; the discretization error is
  // below 2^-63, far under any statistical resolution here
  const double pd = p.convert_to<double>();
  const bool always = pd >= 1.0;
  const std::uint64_t threshold =
      always ? 0 : static_cast<std::uint64_t>(pd * 18446744073709551616.0);

  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    detail::SplitMix64 g{detail::replicate_stream_seed(seed, i)};
    int count = 0;
    if (always) {
      count = n;
    } else {
      for (int j = 0; j < n; ++j) count += g.next() < threshold ? 1 : 0;
    }
    hits += in_event[count] ? 1 : 0;
  }

  McTailResult result;
  result.hits = hits;
  result.samples = samples;
  result.estimate = static_cast<double>(hits) / static_cast<double>(samples);
  result.standard_error =
      std::sqrt(result.estimate * (1.0 - result.estimate) / static_cast<double>(samples));
  return result;
}

}  // namespace chebmom
