#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chebmom/errors.hpp"
#include "chebmom/moments.hpp"
#include "chebmom/rational.hpp"

// Moment-optimized Chebyshev concentration bounds, exact tail oracle,
// minimal-sample-size planning and the large-n effective-sample-size
// asymptotics.

namespace chebmom {

// P(|S_n(p)/n| > eps) <= E S_n^{2m}(1/2) / (n eps)^{2m}, uniformly in p when
// p = 1/2 maximizes the 2m-th moment (m <= m_n). Computed exactly, never
// clipped: values above 1 are returned as-is.
inline Rational cheb_bound(int n, const Rational& epsilon, int m) {
  detail::require_nm(n, m);
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be > 0");
  // Both moment routes give the same exact value; the composition sum costs
  // O(2^{m-1}) independent of n, which wins for the large n the planner probes.
  const Rational moment = (n > 100000 && m <= 25) ? moment_half_composition(n, m).value
                                                  : moment_half_binomsum(n, m).value;
  return moment / rpow(Rational(n) * epsilon, static_cast<unsigned>(2 * m));
}

struct BoundRow {
  int m = 0;
  Rational bound;
  bool selectable = true;  // false beyond a caller-supplied validity cap
};

struct BoundProfile {
  int n = 0;
  Rational epsilon;
  std::vector<BoundRow> rows;
  int best_m = 0;        // smallest minimizer among selectable rows
  Rational best_bound;
};

// Bound rows for m = 1..m_cap. When the caller supplies a validity cap
// (typically a computed m_n), rows beyond it are flagged not selectable and
// excluded from the minimum.
inline BoundProfile bound_profile(int n, const Rational& epsilon, int m_cap,
                                  std::optional<int> validity_cap = std::nullopt) {
  if (m_cap < 1) throw std::invalid_argument("m_cap must be >= 1");
  if (validity_cap && *validity_cap < 1)
    throw std::invalid_argument("validity cap must be >= 1 when supplied");
  BoundProfile profile;
  profile.n = n;
  profile.epsilon = epsilon;
  for (int m = 1; m <= m_cap; ++m) {
    BoundRow row;
    row.m = m;
    row.bound = cheb_bound(n, epsilon, m);
    row.selectable = !validity_cap || m <= *validity_cap;
    if (row.selectable && (profile.best_m == 0 || row.bound < profile.best_bound)) {
      profile.best_m = m;
      profile.best_bound = row.bound;
    }
    profile.rows.push_back(std::move(row));
  }
  return profile;
}

struct PlanResult {
  std::int64_t n_star = 0;
  int m_used = 0;
  Rational achieved_bound;
  Rational effective_sample_size;  // n_star * eps^2
};

inline constexpr std::int64_t kPlanMaxN = 1000000000;  // search ceiling 10^9

// Smallest n with cheb_bound(n, eps, m) <= delta: exponential bracketing then
// binary search, with the crossing verified exactly afterwards. If the
// verification reveals a non-monotone crossing, falls back to a linear scan
// and returns the true minimum.
inline PlanResult min_sample_size(const Rational& epsilon, const Rational& delta, int m) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (epsilon <= 0 || epsilon >= 1) throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (delta <= 0 || delta > 1) throw std::invalid_argument("delta must lie in (0, 1]");

  auto ok = [&](std::int64_t n) { return cheb_bound(static_cast<int>(n), epsilon, m) <= delta; };

  std::int64_t hi = 1;
  while (!ok(hi)) {
    if (hi >= kPlanMaxN)
      throw ResourceLimitError("min_sample_size: no n <= 10^9 satisfies the bound");
    hi = std::min<std::int64_t>(hi * 2, kPlanMaxN);
  }
  std::int64_t lo = hi / 2;  // bound(lo) > delta (or lo == 0)
  while (lo + 1 < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (ok(mid))
      hi = mid;
    else
      lo = mid;
  }

  std::int64_t n_star = hi;
  // explicit postcondition check; linear scan if the crossing is not clean
  if (!ok(n_star) || (n_star > 1 && ok(n_star - 1))) {
    n_star = 1;
    while (!ok(n_star)) ++n_star;
  }

  PlanResult plan;
  plan.n_star = n_star;
  plan.m_used = m;
  plan.achieved_bound = cheb_bound(static_cast<int>(n_star), epsilon, m);
  plan.effective_sample_size = Rational(n_star) * epsilon * epsilon;
  return plan;
}

struct PlanQuery {
  Rational epsilon;   // estimation tolerance, in (0,1)
  Rational delta;     // risk, in (0,1)
  std::optional<int> m;
  int m_cap = 25;
};

// Best plan over m = 1..m_cap (or the fixed m): smallest n_star, ties broken
// by smaller m.
inline PlanResult best_plan(const PlanQuery& query) {
  if (query.epsilon <= 0 || query.epsilon >= 1)
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (query.delta <= 0 || query.delta >= 1)
    throw std::invalid_argument("delta must lie in (0, 1)");
  if (query.m) return min_sample_size(query.epsilon, query.delta, *query.m);
  if (query.m_cap < 1) throw std::invalid_argument("m_cap must be >= 1");

  std::optional<PlanResult> best;
  for (int m = 1; m <= query.m_cap; ++m) {
    PlanResult plan = min_sample_size(query.epsilon, query.delta, m);
    if (!best || plan.n_star < best->n_star) best = std::move(plan);
  }
  return *best;
}

// P(|S_n(p)/n| > eps) exactly: the sum of binom(n,k) p^k q^{n-k} over the
// lattice points with |k - np| > n eps (strict, matching the bound's event).
inline Rational exact_tail(int n, const Rational& p, const Rational& epsilon) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  detail::require_unit_interval(p);
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be > 0");
  if (p == 0 || p == 1) return Rational(0);  // S_n(p) = 0 almost surely

  const Rational q = 1 - p;
  const Rational np = Rational(n) * p;
  const Rational neps = Rational(n) * epsilon;
  Rational weight = rpow(q, static_cast<unsigned>(n));
  BigInt binom(1);
  Rational tail(0);
  for (int k = 0; k <= n; ++k) {
    if (rabs(Rational(k) - np) > neps) tail += Rational(binom) * weight;
    binom *= n - k;
    binom /= k + 1;
    weight *= p;
    weight /= q;
  }
  return tail;
}

struct AsymptoticRow {
  int m = 0;
  Rational b;  // B_m = 2^{-3m} (2m)!/m! ntilde^{-m}
};

struct AsymptoticProfile {
  Rational ntilde;
  std::vector<AsymptoticRow> rows;
  int m_star = 0;  // smallest minimizer among the rows
};

// Large-n limit of the order-2m bound through the effective sample size
// ntilde = n eps^2. B_{m+1}/B_m = (2m+1)/(4 ntilde) exactly, so B decreases
// while m <= 2 ntilde - 1/2.
inline AsymptoticProfile asymptotic_profile(const Rational& ntilde, int m_cap) {
  if (ntilde <= 0) throw std::invalid_argument("ntilde must be > 0");
  if (m_cap < 1) throw std::invalid_argument("m_cap must be >= 1");
  AsymptoticProfile profile;
  profile.ntilde = ntilde;
  Rational best;
  for (int m = 1; m <= m_cap; ++m) {
    AsymptoticRow row;
    row.m = m;
    row.b = gaussian_even_moment(m) /
            (Rational(ipow(4, static_cast<unsigned>(m))) * rpow(ntilde, static_cast<unsigned>(m)));
    if (profile.m_star == 0 || row.b < best) {
      profile.m_star = m;
      best = row.b;
    }
    profile.rows.push_back(std::move(row));
  }
  return profile;
}

// The asymptotically optimal moment order 2 m*, where m* is the smallest
// minimizer of B_m: m* = max(1, ceil(2 ntilde - 1/2)). Equals the even order
// nearest 4 ntilde; exact ties resolve toward the smaller order.
inline int rule_of_thumb_order(const Rational& ntilde) {
  if (ntilde <= 0) throw std::invalid_argument("ntilde must be > 0");
  const BigInt m_star = rceil(2 * ntilde - Rational(1, 2));
  if (m_star < 1) return 2;
  return 2 * static_cast<int>(m_star);
}

}  // namespace chebmom
