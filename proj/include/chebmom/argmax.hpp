#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chebmom/combinatorics.hpp"
#include "chebmom/errors.hpp"
#include "chebmom/moments.hpp"
#include "chebmom/polynomial.hpp"
#include "chebmom/rational.hpp"
#include "chebmom/sturm.hpp"

// Where is p |-> E S_n^{2m}(p) maximized? Exact symbolic expansion of the
// moment polynomial, root isolation of its derivative, the is-argmax-at-1/2
// decision, and the empirical threshold m_n.

namespace chebmom {

// P_{n,m} with integer coefficients such that P_{n,m}(p) = E S_n^{2m}(p):
// expand sum_k binom(n,k) p^k (1-p)^{n-k} (k-np)^{2m} with exact integer
// polynomial arithmetic. Degree <= n + 2m, and P(0) = P(1) = 0.
inline IntPolynomial moment_polynomial(int n, int m) {
  detail::require_nm(n, m);
  // (1-p)^t for t = 0..n
  std::vector<IntPolynomial> onemp(static_cast<std::size_t>(n) + 1);
  onemp[0] = IntPolynomial::from_ints({1});
  const IntPolynomial one_minus_p = IntPolynomial::from_ints({1, -1});
  for (int t = 1; t <= n; ++t) onemp[t] = onemp[t - 1] * one_minus_p;

  IntPolynomial acc;
  for (int k = 0; k <= n; ++k) {
    // (k - np)^{2m} expanded by the binomial theorem
    std::vector<BigInt> dev(static_cast<std::size_t>(2 * m) + 1);
    for (int j = 0; j <= 2 * m; ++j)
      dev[j] = binomial(2 * m, j) * ipow(BigInt(k), static_cast<unsigned>(2 * m - j)) *
               ipow(BigInt(-n), static_cast<unsigned>(j));
    IntPolynomial term = IntPolynomial(std::move(dev)) * onemp[n - k] * binomial(n, k);
    // shift by p^k
    if (k > 0) term = term * IntPolynomial::monomial(BigInt(1), static_cast<std::size_t>(k));
    acc = acc + term;
  }
  return acc;
}

// Formal polynomial derivative (exact).
inline IntPolynomial derivative(const IntPolynomial& poly) { return poly.derivative(); }

namespace detail {

// Decides whether P(1/2) is the unique global maximum of P over [0,1] by
// exact value bracketing of P at every critical point in (0, 1/2) plus the
// endpoints. Only reached in the degenerate square-factor case.
inline bool unique_max_at_half_by_bracketing(const IntPolynomial& P) {
  const Rational half(1, 2);
  const Rational half_val = P.eval(half);
  if (P.eval(Rational(0)) >= half_val || P.eval(Rational(1)) >= half_val) return false;

  const IntPolynomial D = P.derivative();
  auto intervals = isolate_roots(D, Rational(0), half, Rational(1, 16));
  const RootCounter rc(D);
  // integer polynomial with the same roots as P - P(1/2)
  const IntPolynomial shifted =
      P * denominator(half_val) - IntPolynomial::monomial(numerator(half_val), 0);
  const Rational budget = Rational(1, ipow(2, 200));

  for (auto& iv : intervals) {
    if (iv.exact_root) {
      if (P.eval(*iv.exact_root) >= half_val) return false;
      continue;
    }
    for (;;) {
      const auto [lo_e, hi_e] = P.enclosure(iv.lo, iv.hi);
      if (hi_e < half_val) break;           // dominated by 1/2
      if (lo_e > half_val) return false;    // beats 1/2
      // straddling: an exact tie would never separate, so test for one
      const IntPolynomial tie = gcd_poly(shifted, D);
      if (tie.degree() >= 1 && RootCounter(tie).count_halfopen(iv.lo, iv.hi) > 0) return false;
      if (iv.width() <= budget)
        throw IndistinguishableMaximaError(
            "value bracketing could not separate a critical value from P(1/2) above width 2^-200");
      refine_interval(rc, iv, iv.width() / 4);
      if (iv.exact_root) {
        if (P.eval(*iv.exact_root) >= half_val) return false;
        break;
      }
    }
  }
  return true;
}

}  // namespace detail

// The derivative-sign criterion: true iff d/dp P has no root in the open
// interval (0, 1/2) and is positive at p = 1/4. Because the moment polynomial
// is symmetric about 1/2, the derivative factors as (1-2p) Q'(p - p^2), so the
// test runs on Q' over u in (0, 1/4) at half the degree. A square factor of
// the derivative inside the interval (sign-preserving flat point) triggers the
// exact value-bracketing fallback instead.
inline bool half_argmax_decision(const IntPolynomial& P) {
  const IntPolynomial Q = symmetric_reduce(P);
  const IntPolynomial Qd = Q.derivative();
  if (Qd.is_zero()) return false;  // constant moment polynomial cannot happen for n,m >= 1

  const Rational quarter(1, 4);
  const RootCounter rc(Qd);
  const int roots = rc.count_open(Rational(0), quarter);
  if (roots == 0) return Qd.sign_at(Rational(3, 16)) > 0;  // sign of P'(1/4)

  // roots exist; fall back to bracketing only if one of them is degenerate
  const IntPolynomial g = gcd_poly(Qd, Qd.derivative());
  if (g.degree() >= 1 && RootCounter(g).count_open(Rational(0), quarter) > 0)
    return detail::unique_max_at_half_by_bracketing(P);
  return false;
}

inline bool is_half_argmax(int n, int m) { return half_argmax_decision(moment_polynomial(n, m)); }

struct ArgmaxReport {
  int n = 0;
  int m = 0;
  bool is_half_argmax = false;
  std::vector<RootInterval> maximizers;       // degenerate [1/2,1/2] entry = the exact point
  std::vector<RootInterval> critical_points;  // roots of P' in (0,1)
  std::pair<Rational, Rational> max_value_bounds;
  std::vector<std::string> notes;
};

namespace detail {

struct Candidate {
  RootInterval iv;
  std::optional<Rational> exact_value;  // set when the location is an exact rational
  Rational lo_val, hi_val;

  void refresh(const IntPolynomial& P) {
    if (iv.exact_root) {
      exact_value = P.eval(*iv.exact_root);
      lo_val = hi_val = *exact_value;
    } else {
      const auto e = P.enclosure(iv.lo, iv.hi);
      lo_val = e.first;
      hi_val = e.second;
    }
  }
};

inline bool mirror_pair(const RootInterval& a, const RootInterval& b) {
  return a.lo == 1 - b.hi && a.hi == 1 - b.lo;
}

}  // namespace detail

inline Rational default_argmax_width() { return Rational(1, ipow(10, 12)); }

// Critical points of P_{n,m} in (0,1), exact value brackets, and the argmax
// verdict. Maximizer intervals are refined until the global maximizer set is
// separated from everything else; an unresolved tie below width 2^-200 raises
// IndistinguishableMaximaError rather than guessing.
inline ArgmaxReport argmax_report(int n, int m, const Rational& width = default_argmax_width()) {
  detail::require_nm(n, m);
  if (width <= 0) throw std::invalid_argument("argmax_report: width must be > 0");

  const IntPolynomial P = moment_polynomial(n, m);
  const IntPolynomial D = P.derivative();
  const Rational half(1, 2);
  const Rational half_val = P.eval(half);

  ArgmaxReport report;
  report.n = n;
  report.m = m;
  report.is_half_argmax = half_argmax_decision(P);
  report.critical_points = isolate_roots(D, Rational(0), Rational(1), width);

  if (report.is_half_argmax) {
    report.maximizers.push_back(
        RootInterval{half, half, MultiplicityNote::simple, half});
    report.max_value_bounds = {half_val, half_val};
  } else {
    const RootCounter rc(D);
    // Candidates: every critical interval except the one pinned at 1/2, plus
    // the exact point 1/2 itself. Endpoints of [0,1] are never maximizers
    // (the moment vanishes there and is positive inside).
    std::vector<detail::Candidate> cands;
    for (const auto& iv : report.critical_points) {
      if (iv.exact_root && *iv.exact_root == half) continue;
      detail::Candidate c;
      c.iv = iv;
      cands.push_back(std::move(c));
    }
    {
      detail::Candidate at_half;
      at_half.iv = RootInterval{half, half, MultiplicityNote::simple, half};
      cands.push_back(std::move(at_half));
    }

    const Rational budget = Rational(1, ipow(2, 200));
    const IntPolynomial shifted =
        P * denominator(half_val) - IntPolynomial::monomial(numerator(half_val), 0);

    for (;;) {
      for (auto& c : cands) c.refresh(P);
      Rational best_lo = cands.front().lo_val;
      for (const auto& c : cands) best_lo = std::max(best_lo, c.lo_val);

      std::vector<detail::Candidate> survivors;
      for (auto& c : cands)
        if (c.hi_val >= best_lo) survivors.push_back(std::move(c));
      cands = std::move(survivors);

      // done when all survivors carry exact values, or when they form a
      // single interval mirror-pair (equal values by symmetry), possibly
      // with exact points that tie exactly
      bool all_exact = true;
      std::vector<std::size_t> interval_idx;
      for (std::size_t i = 0; i < cands.size(); ++i)
        if (!cands[i].exact_value) {
          all_exact = false;
          interval_idx.push_back(i);
        }
      if (all_exact) break;

      if (interval_idx.size() == 2 &&
          detail::mirror_pair(cands[interval_idx[0]].iv, cands[interval_idx[1]].iv)) {
        bool exact_ok = true;
        for (const auto& c : cands) {
          if (!c.exact_value) continue;
          // an exact point survives a mirror pair only on a certified tie
          if (*c.exact_value != half_val) { exact_ok = false; break; }
          const IntPolynomial tie = gcd_poly(shifted, D);
          if (tie.degree() < 1 ||
              RootCounter(tie).count_halfopen(cands[interval_idx[0]].iv.lo,
                                              cands[interval_idx[0]].iv.hi) == 0) {
            exact_ok = false;
            break;
          }
        }
        if (exact_ok) break;
      }

      Rational min_width(0);
      for (auto idx : interval_idx) min_width = std::max(min_width, cands[idx].iv.width());
      if (min_width <= budget)
        throw IndistinguishableMaximaError(
            "argmax_report: candidate maxima not separable above width 2^-200");
      for (auto idx : interval_idx) refine_interval(rc, cands[idx].iv, cands[idx].iv.width() / 4);
    }

    Rational lo_b = cands.front().lo_val, hi_b = cands.front().hi_val;
    for (const auto& c : cands) {
      lo_b = std::max(lo_b, c.lo_val);
      hi_b = std::max(hi_b, c.hi_val);
    }
    report.max_value_bounds = {lo_b, hi_b};
    for (auto& c : cands) report.maximizers.push_back(std::move(c.iv));
    std::sort(report.maximizers.begin(), report.maximizers.end(),
              [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
  }

  if (n == 1 && m == 2) {
    report.notes.push_back(
        "critical points of p - 4p^2 + 6p^3 - 3p^4 are 1/2 and 1/2 +- sqrt(3)/6 "
        "(about 0.211325 and 0.788675); the locations 1/2 +- sqrt(2)/4 (about "
        "0.146447 and 0.853553) sometimes quoted for this case do not satisfy "
        "1 - 8p + 18p^2 - 12p^3 = 0");
  }
  return report;
}

struct MnResult {
  int m_n = 0;
  bool capped = false;
  bool warned_m1 = false;  // set if the property already fails at m = 1
};

// Largest m <= m_cap such that the half-argmax property holds for every
// m' <= m. A single failure terminates the scan.
inline MnResult compute_mn(int n, int m_cap) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (m_cap < 1) throw std::invalid_argument("m_cap must be >= 1");
  MnResult out;
  for (int m = 1; m <= m_cap; ++m) {
    if (!is_half_argmax(n, m)) {
      out.m_n = m - 1;
      out.warned_m1 = (m == 1);
      return out;
    }
  }
  out.m_n = m_cap;
  out.capped = true;
  return out;
}

struct MnRow {
  int n = 0;
  int m_n = 0;
  bool capped = false;
};

struct MnTable {
  std::vector<MnRow> rows;
};

inline MnTable mn_table(int n_min, int n_max, int m_cap) {
  if (n_min < 1 || n_max < n_min) throw std::invalid_argument("mn_table: need 1 <= n_min <= n_max");
  MnTable table;
  table.rows.reserve(static_cast<std::size_t>(n_max - n_min) + 1);
  for (int n = n_min; n <= n_max; ++n) {
    const MnResult r = compute_mn(n, m_cap);
    table.rows.push_back(MnRow{n, r.m_n, r.capped});
  }
  return table;
}

}  // namespace chebmom
