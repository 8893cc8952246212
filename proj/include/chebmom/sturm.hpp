#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chebmom/polynomial.hpp"
#include "chebmom/rational.hpp"

// Exact real-root counting and isolation via Sturm sequences. No floating
// point anywhere: all interval endpoints are rationals and every certificate
// is a sign-variation count.

namespace chebmom {

// Sturm chain stored as a subresultant PRS plus per-element corrective signs,
// so the variation count matches the classical chain while coefficients stay
// subresultant-sized.
class SturmChain {
 public:
  SturmChain(const IntPolynomial& f0, const IntPolynomial& f1) {
    auto prs = detail::subresultant_prs(f0, f1);
    elems_ = std::move(prs.seq);
    fix_ = std::move(prs.sturm_fix);
    while (!elems_.empty() && elems_.back().is_zero()) {
      elems_.pop_back();
      fix_.pop_back();
    }
  }

  // Sign variations at x, zeros skipped.
  int variations_at(const Rational& x) const {
    int count = 0;
    int last = 0;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      const int s = elems_[i].sign_at(x) * fix_[i];
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  const std::vector<IntPolynomial>& elements() const { return elems_; }

 private:
  std::vector<IntPolynomial> elems_;
  std::vector<int> fix_;
};

// Root counting for one polynomial: builds the Sturm chain of its square-free
// part once, then answers interval queries. The chain of (f, f') already ends
// in gcd(f, f'), so the square-free part comes out of the same PRS when f has
// repeated factors.
class RootCounter {
 public:
  explicit RootCounter(const IntPolynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("root counting on the zero polynomial");
    if (f.degree() == 0) {
      squarefree_ = f;
      return;
    }
    SturmChain chain(f, f.derivative());
    const IntPolynomial& tail = chain.elements().back();
    if (tail.degree() == 0) {
      squarefree_ = f;
      chain_.emplace(std::move(chain));
      return;
    }
    IntPolynomial g = tail.primitive_part();
    if (g.leading() < 0) g = -g;
    squarefree_ = divide_exact(f.primitive_part(), g);
    chain_.emplace(squarefree_, squarefree_.derivative());
  }

  const IntPolynomial& squarefree() const { return squarefree_; }

  bool is_root(const Rational& x) const { return squarefree_.sign_at(x) == 0; }

  // number of distinct real roots in (lo, hi]
  int count_halfopen(const Rational& lo, const Rational& hi) const {
    if (lo >= hi) throw std::invalid_argument("root count needs lo < hi");
    if (!chain_) return 0;  // nonzero constant
    return chain_->variations_at(lo) - chain_->variations_at(hi);
  }

  // number of distinct real roots in the open interval (lo, hi)
  int count_open(const Rational& lo, const Rational& hi) const {
    int c = count_halfopen(lo, hi);
    if (is_root(hi)) --c;
    return c;
  }

 private:
  IntPolynomial squarefree_;
  std::optional<SturmChain> chain_;
};

// Number of distinct real roots of poly in (lo, hi], from the Sturm sequence
// of the square-free part.
inline int sturm_root_count(const IntPolynomial& poly, const Rational& lo, const Rational& hi) {
  return RootCounter(poly).count_halfopen(lo, hi);
}

enum class MultiplicityNote { simple, unresolved };

inline const char* to_string(MultiplicityNote n) {
  return n == MultiplicityNote::simple ? "simple" : "unresolved";
}

// Open interval certified to contain exactly one distinct real root.
// exact_root is set when the root landed on a rational bisection point; the
// interval then straddles it.
struct RootInterval {
  Rational lo;
  Rational hi;
  MultiplicityNote note = MultiplicityNote::simple;
  std::optional<Rational> exact_root;

  Rational midpoint() const { return exact_root ? *exact_root : (lo + hi) / 2; }
  Rational width() const { return hi - lo; }
};

namespace detail {

// Shrinks (lo, hi) around a known exact interior root until it is the only
// root inside and neither endpoint is a root.
inline void shrink_around_point(const RootCounter& rc, const Rational& root, Rational& lo,
                                Rational& hi, const Rational& max_halfwidth) {
  const Rational left_gap = root - lo;
  const Rational right_gap = hi - root;
  Rational delta = std::min(Rational(std::min(left_gap, right_gap) / 2), max_halfwidth);
  for (;;) {
    const Rational a = root - delta;
    const Rational b = root + delta;
    if (!rc.is_root(a) && !rc.is_root(b) && rc.count_open(a, b) == 1) {
      lo = a;
      hi = b;
      return;
    }
    delta /= 2;
  }
}

}  // namespace detail

// Disjoint open intervals, each certified by a Sturm count of one to contain
// exactly one distinct real root of poly in (lo, hi), each of width <= width.
// Pure bisection with exact rational endpoints.
inline std::vector<RootInterval> isolate_roots(const IntPolynomial& poly, const Rational& lo,
                                               const Rational& hi, const Rational& width) {
  if (width <= 0) throw std::invalid_argument("isolate_roots: width must be > 0");
  if (lo >= hi) throw std::invalid_argument("isolate_roots: lo < hi required");
  const RootCounter rc(poly);

  // multiple-root detector for the multiplicity note
  std::optional<RootCounter> repeated;
  if (poly.degree() >= 1) {
    const IntPolynomial g = gcd_poly(poly, poly.derivative());
    if (g.degree() >= 1) repeated.emplace(g);
  }

  std::vector<RootInterval> found;
  struct Segment {
    Rational a, b;
    int roots;
  };
  std::vector<Segment> stack;
  const int total = rc.count_open(lo, hi);
  if (total > 0) stack.push_back({lo, hi, total});

  auto emit = [&](Rational a, Rational b, std::optional<Rational> exact) {
    RootInterval iv{std::move(a), std::move(b), MultiplicityNote::simple, std::move(exact)};
    if (repeated && repeated->count_halfopen(iv.lo, iv.hi) > 0)
      iv.note = MultiplicityNote::unresolved;
    found.push_back(std::move(iv));
  };

  while (!stack.empty()) {
    Segment seg = std::move(stack.back());
    stack.pop_back();
    if (seg.roots == 1 && seg.b - seg.a <= width) {
      emit(seg.a, seg.b, std::nullopt);
      continue;
    }
    const Rational mid = (seg.a + seg.b) / 2;
    if (rc.is_root(mid)) {
      Rational a = seg.a, b = seg.b;
      detail::shrink_around_point(rc, mid, a, b, width / 2);
      emit(a, b, mid);
      const int left = rc.count_open(seg.a, a);
      const int right = rc.count_open(b, seg.b);
      if (left > 0) stack.push_back({seg.a, a, left});
      if (right > 0) stack.push_back({b, seg.b, right});
    } else {
      const int left = rc.count_open(seg.a, mid);
      const int right = seg.roots - left;
      if (left > 0) stack.push_back({seg.a, mid, left});
      if (right > 0) stack.push_back({mid, seg.b, right});
    }
  }

  std::sort(found.begin(), found.end(),
            [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
  return found;
}

// Halves an isolating interval (for the same counter) until its width is at
// most `target`. The root stays strictly inside and endpoints stay non-roots.
inline void refine_interval(const RootCounter& rc, RootInterval& iv, const Rational& target) {
  if (iv.exact_root) {
    if (iv.width() > target)
      detail::shrink_around_point(rc, *iv.exact_root, iv.lo, iv.hi, target / 2);
    return;
  }
  while (iv.width() > target) {
    const Rational mid = (iv.lo + iv.hi) / 2;
    if (rc.is_root(mid)) {
      iv.exact_root = mid;
      detail::shrink_around_point(rc, mid, iv.lo, iv.hi, target / 2);
      return;
    }
    if (rc.count_open(iv.lo, mid) == 1)
      iv.hi = mid;
    else
      iv.lo = mid;
  }
}

}  // namespace chebmom
