#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chebmom/rational.hpp"

namespace chebmom {

// Dense polynomial with exact integer coefficients, ascending powers.
// Invariant: coefficient vector is empty (zero polynomial) or ends in a
// nonzero leading coefficient.
class IntPolynomial {
 public:
  IntPolynomial() = default;

  explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPolynomial from_ints(std::initializer_list<long long> coeffs) {
    std::vector<BigInt> v;
    v.reserve(coeffs.size());
    for (long long x : coeffs) v.emplace_back(x);
    return IntPolynomial(std::move(v));
  }

  static IntPolynomial monomial(const BigInt& coeff, std::size_t power) {
    if (coeff == 0) return {};
    std::vector<BigInt> v(power + 1);
    v[power] = coeff;
    return IntPolynomial(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<BigInt>& coefficients() const { return c_; }

  const BigInt& leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  BigInt coefficient(std::size_t power) const {
    return power < c_.size() ? c_[power] : BigInt(0);
  }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coefficient(i) + b.coefficient(i);
    return IntPolynomial(std::move(v));
  }

  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coefficient(i) - b.coefficient(i);
    return IntPolynomial(std::move(v));
  }

  IntPolynomial operator-() const {
    std::vector<BigInt> v(c_);
    for (auto& x : v) x = -x;
    return IntPolynomial(std::move(v));
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPolynomial(std::move(v));
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const BigInt& s) {
    if (s == 0) return {};
    std::vector<BigInt> v(a.c_);
    for (auto& x : v) x *= s;
    return IntPolynomial(std::move(v));
  }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

  IntPolynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigInt> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<unsigned>(i);
    return IntPolynomial(std::move(v));
  }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + Rational(c_[i]);
    return acc;
  }

  // Sign of the value at x = a/b without forming the rational: evaluates the
  // homogenized integer form sum c_j a^j b^{d-j}.
  int sign_at(const Rational& x) const {
    if (c_.empty()) return 0;
    const BigInt& a = numerator(x);
    const BigInt& b = denominator(x);  // > 0
    BigInt acc = c_.back();
    BigInt bpow(1);
    for (std::size_t i = c_.size() - 1; i-- > 0;) {
      bpow *= b;
      acc = acc * a + c_[i] * bpow;
    }
    return sgn(acc);
  }

  // gcd of coefficients (nonnegative); 0 for the zero polynomial.
  BigInt content() const {
    BigInt g(0);
    for (const auto& x : c_) {
      g = boost::multiprecision::gcd(g, x);
      if (g == 1) break;
    }
    return g < 0 ? BigInt(-g) : g;
  }

  // Divides out the (positive) content; keeps the leading sign.
  IntPolynomial primitive_part() const {
    if (is_zero()) return {};
    const BigInt g = content();
    if (g == 1) return *this;
    std::vector<BigInt> v(c_);
    for (auto& x : v) x /= g;
    return IntPolynomial(std::move(v));
  }

  // Exact division by a scalar that must divide every coefficient.
  IntPolynomial divide_scalar_exact(const BigInt& s) const {
    if (s == 0) throw std::logic_error("division by zero scalar");
    std::vector<BigInt> v(c_);
    for (auto& x : v) {
      if (x % s != 0) throw std::logic_error("divide_scalar_exact: not divisible");
      x /= s;
    }
    return IntPolynomial(std::move(v));
  }

  // [lo_bound, hi_bound] enclosing the range of the polynomial over [lo, hi],
  // by interval-arithmetic Horner with exact rational endpoints.
  std::pair<Rational, Rational> enclosure(const Rational& lo, const Rational& hi) const {
    if (lo > hi) throw std::invalid_argument("enclosure: lo > hi");
    Rational acc_lo(0), acc_hi(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
      const Rational p1 = acc_lo * lo, p2 = acc_lo * hi, p3 = acc_hi * lo, p4 = acc_hi * hi;
      acc_lo = std::min(std::min(p1, p2), std::min(p3, p4)) + Rational(c_[i]);
      acc_hi = std::max(std::max(p1, p2), std::max(p3, p4)) + Rational(c_[i]);
    }
    return {acc_lo, acc_hi};
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;
};

// Pseudo-remainder: rem(lc(g)^{deg f - deg g + 1} f, g), exact over the
// integers. Requires deg f >= deg g >= 0.
inline IntPolynomial pseudo_remainder(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) throw std::logic_error("pseudo_remainder by zero");
  if (f.degree() < g.degree()) throw std::logic_error("pseudo_remainder: deg f < deg g");
  const BigInt& d = g.leading();
  int e = f.degree() - g.degree() + 1;
  IntPolynomial r = f;
  while (!r.is_zero() && r.degree() >= g.degree()) {
    const IntPolynomial lead = IntPolynomial::monomial(r.leading(),
                                                       static_cast<std::size_t>(r.degree() - g.degree()));
    r = r * d - g * lead;
    --e;
  }
  if (e > 0) r = r * ipow(d, static_cast<unsigned>(e));
  return r;
}

// Exact polynomial division; throws if the divisor does not divide evenly.
inline IntPolynomial divide_exact(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) throw std::logic_error("divide_exact by zero");
  if (f.is_zero()) return {};
  if (f.degree() < g.degree()) throw std::logic_error("divide_exact: not divisible");
  std::vector<BigInt> q(static_cast<std::size_t>(f.degree() - g.degree()) + 1);
  IntPolynomial r = f;
  while (!r.is_zero() && r.degree() >= g.degree()) {
    if (r.leading() % g.leading() != 0) throw std::logic_error("divide_exact: not divisible");
    const BigInt coeff = r.leading() / g.leading();
    const std::size_t shift = static_cast<std::size_t>(r.degree() - g.degree());
    q[shift] = coeff;
    r = r - g * IntPolynomial::monomial(coeff, shift);
  }
  if (!r.is_zero()) throw std::logic_error("divide_exact: nonzero remainder");
  return IntPolynomial(std::move(q));
}

namespace detail {

inline int sign_pow(int s, int exp) { return (s == -1 && exp % 2 != 0) ? -1 : (s == 0 ? 0 : 1); }

// Subresultant pseudo-remainder sequence (Brown's algorithm). Keeps
// coefficient growth polynomially bounded with only exact scalar divisions,
// no per-step content gcds.
//
// sturm_fix[i] is the sign making sturm_fix[i] * seq[i] a positive multiple of
// the classical Sturm remainder t_i (t_0 = f0, t_1 = f1,
// t_{i+1} = -rem(t_{i-1}, t_i)). Each step satisfies
//   seq[i+1] = lc(seq[i])^{delta+1} * rem(seq[i-1], seq[i]) / beta,
// and rem() is linear in its first argument and invariant to scaling of its
// second, which gives the sign recurrence used below.
struct PrsResult {
  std::vector<IntPolynomial> seq;
  std::vector<int> sturm_fix;
};

inline PrsResult subresultant_prs(const IntPolynomial& f0, const IntPolynomial& f1) {
  PrsResult out;
  out.seq = {f0, f1};
  out.sturm_fix = {1, 1};
  if (f0.is_zero() || f1.is_zero()) return out;

  auto& seq = out.seq;
  int delta = f0.degree() - f1.degree();  // gap for the upcoming pseudo-division
  BigInt beta = (delta % 2 == 0) ? BigInt(-1) : BigInt(1);  // (-1)^{delta+1}
  BigInt psi(-1);
  for (;;) {
    const IntPolynomial& prev = seq[seq.size() - 2];
    const IntPolynomial& cur = seq[seq.size() - 1];
    if (prev.degree() < cur.degree()) throw std::logic_error("prs: degree order violated");

    const int fix_new = -out.sturm_fix[out.sturm_fix.size() - 2] *
                        sign_pow(sgn(cur.leading()), delta + 1) * sgn(beta);
    IntPolynomial rem = pseudo_remainder(prev, cur);
    if (rem.is_zero()) break;
    rem = rem.divide_scalar_exact(beta);
    seq.push_back(std::move(rem));
    out.sturm_fix.push_back(fix_new);
    const std::size_t k = seq.size();
    if (seq[k - 1].degree() == 0) break;

    // psi/beta updates for the next step
    const BigInt neg_lead = -seq[k - 2].leading();
    if (delta == 0) {
      // psi_next = (-lc)^0 * psi^{1-0} = psi
    } else {
      const BigInt num = ipow(neg_lead, static_cast<unsigned>(delta));
      const BigInt den = ipow(psi, static_cast<unsigned>(delta - 1));
      if (den == 0 || num % den != 0) throw std::logic_error("prs: psi update not exact");
      psi = num / den;
    }
    delta = seq[k - 2].degree() - seq[k - 1].degree();
    beta = -seq[k - 2].leading() * ipow(psi, static_cast<unsigned>(delta));
  }
  return out;
}

}  // namespace detail

// Polynomial gcd over the integers: primitive with positive leading
// coefficient; a nonzero constant for coprime inputs.
inline IntPolynomial gcd_poly(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return b.leading() < 0 ? (-b).primitive_part() : b.primitive_part();
  if (b.is_zero()) return a.leading() < 0 ? (-a).primitive_part() : a.primitive_part();
  const IntPolynomial* hi = &a;
  const IntPolynomial* lo = &b;
  if (hi->degree() < lo->degree()) std::swap(hi, lo);
  const auto prs = detail::subresultant_prs(*hi, *lo);
  IntPolynomial g = prs.seq.back().primitive_part();
  if (g.leading() < 0) g = -g;
  return g;
}

// f with repeated factors stripped: f / gcd(f, f'). Leading sign preserved.
inline IntPolynomial squarefree_part(const IntPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree_part of zero polynomial");
  if (f.degree() == 0) return f.primitive_part();
  const IntPolynomial g = gcd_poly(f, f.derivative());
  if (g.degree() == 0) return f.primitive_part();
  return divide_exact(f.primitive_part(), g);
}

// Rewrites a polynomial symmetric about 1/2 (P(p) = P(1-p)) in the variable
// u = p(1-p): returns Q with P(p) = Q(p - p^2). Throws if P is not symmetric.
// Halves the degree, which is what makes exact analysis at larger n viable.
inline IntPolynomial symmetric_reduce(const IntPolynomial& poly) {
  if (poly.is_zero()) return {};
  const int half = poly.degree() / 2;
  // u^s as polynomials in p, s = 0..half
  std::vector<IntPolynomial> upow(static_cast<std::size_t>(half) + 1);
  upow[0] = IntPolynomial::from_ints({1});
  const IntPolynomial u = IntPolynomial::from_ints({0, 1, -1});
  for (int s = 1; s <= half; ++s) upow[s] = upow[s - 1] * u;

  IntPolynomial work = poly;
  std::vector<BigInt> q(static_cast<std::size_t>(half) + 1);
  while (work.degree() > 0) {
    const int d = work.degree();
    if (d % 2 != 0)
      throw std::logic_error("symmetric_reduce: polynomial not symmetric about 1/2");
    const int s = d / 2;
    const BigInt c = (s % 2 == 0) ? work.leading() : BigInt(-work.leading());
    q[s] = c;
    work = work - upow[s] * c;
    if (!work.is_zero() && work.degree() >= d)
      throw std::logic_error("symmetric_reduce: cancellation failed");
  }
  q[0] = work.is_zero() ? BigInt(0) : work.leading();
  return IntPolynomial(std::move(q));
}

}  // namespace chebmom
