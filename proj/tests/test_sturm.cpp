#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "chebmom/sturm.hpp"
#include "helpers.hpp"

using namespace chebmom;

TEST_CASE("root counts from the spec examples") {
  // derivative of the n=1, m=2 moment polynomial: three roots in (0, 1]
  CHECK(sturm_root_count(IntPolynomial::from_ints({1, -8, 18, -12}), Rational(0), Rational(1)) == 3);
  CHECK(sturm_root_count(IntPolynomial::from_ints({1, -2}), Rational(0), Rational(1)) == 1);
  // p^2 - 1 on (0, 1]: the root at 1 is counted, -1 is not
  CHECK(sturm_root_count(IntPolynomial::from_ints({-1, 0, 1}), Rational(0), Rational(1)) == 1);
  CHECK_THROWS_AS(sturm_root_count(IntPolynomial(), Rational(0), Rational(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(sturm_root_count(IntPolynomial::from_ints({1, 1}), Rational(1), Rational(0)),
                  std::invalid_argument);
}

TEST_CASE("half-open semantics at the endpoints") {
  const auto f = IntPolynomial::from_ints({-1, 2});  // root 1/2
  CHECK(sturm_root_count(f, Rational(0), Rational(1, 2)) == 1);   // hi root counted
  CHECK(sturm_root_count(f, Rational(1, 2), Rational(1)) == 0);   // lo root excluded
}

TEST_CASE("counting products with known rational roots") {
  std::mt19937_64 gen(47);
  for (int trial = 0; trial < 120; ++trial) {
    // distinct roots r = num/den, some with multiplicity
    std::set<std::pair<int, int>> used;
    std::vector<Rational> roots;
    IntPolynomial f = IntPolynomial::from_ints({1});
    std::uniform_int_distribution<int> den_dist(1, 9);
    std::uniform_int_distribution<int> num_dist(-9, 9);
    std::uniform_int_distribution<int> mult_dist(1, 2);
    const int k = 1 + trial % 5;
    for (int i = 0; i < k; ++i) {
      int den = den_dist(gen), num = num_dist(gen);
      const int g = static_cast<int>(boost::multiprecision::gcd(BigInt(num), BigInt(den))
                                         .convert_to<long long>());
      if (g > 0) { num /= g; den /= g; }
      if (!used.insert({num, den}).second) continue;
      roots.emplace_back(num, den);
      const auto lin = IntPolynomial(std::vector<BigInt>{BigInt(-num), BigInt(den)});
      for (int rep = mult_dist(gen); rep > 0; --rep) f = f * lin;
    }
    if (roots.empty()) continue;

    std::uniform_int_distribution<int> bound_dist(-20, 20);
    Rational lo(bound_dist(gen), 2);
    Rational hi(bound_dist(gen), 2);
    if (lo > hi) std::swap(lo, hi);
    if (lo == hi) hi += 1;

    int expected = 0;
    for (const auto& r : roots)
      if (lo < r && r <= hi) ++expected;
    CHECK(sturm_root_count(f, lo, hi) == expected);
  }
}

TEST_CASE("counts see distinct roots of non-squarefree polynomials") {
  // (3x-1)^2 (3x-2): two distinct roots in (0, 1]
  const auto a = IntPolynomial::from_ints({-1, 3});
  const auto b = IntPolynomial::from_ints({-2, 3});
  CHECK(sturm_root_count(a * a * b, Rational(0), Rational(1)) == 2);
}

TEST_CASE("isolating the critical points of the counterexample moment") {
  // roots: 1/2 and the two roots of 6p^2 - 6p + 1 (1/2 -+ sqrt(3)/6)
  const auto d = IntPolynomial::from_ints({1, -8, 18, -12});
  const Rational width(1, BigInt(1000000000000LL));
  const auto intervals = isolate_roots(d, Rational(0), Rational(1), width);
  REQUIRE(intervals.size() == 3);
  for (const auto& iv : intervals) {
    CHECK(iv.width() <= width);
    CHECK(iv.note == MultiplicityNote::simple);
  }
  CHECK(intervals[1].exact_root.has_value());
  CHECK(*intervals[1].exact_root == Rational(1, 2));

  const auto quad = IntPolynomial::from_ints({1, -6, 6});
  for (const auto* iv : {&intervals[0], &intervals[2]}) {
    const int slo = quad.sign_at(iv->lo);
    const int shi = quad.sign_at(iv->hi);
    CHECK(slo * shi < 0);  // the quadratic root is inside
  }
  // symmetric pair
  CHECK(intervals[0].lo == 1 - intervals[2].hi);
  CHECK(intervals[0].hi == 1 - intervals[2].lo);
}

TEST_CASE("isolation examples and width control") {
  const auto lin = IntPolynomial::from_ints({1, -2});
  auto one = isolate_roots(lin, Rational(0), Rational(1), Rational(1, 1000));
  REQUIRE(one.size() == 1);
  CHECK(one[0].lo < Rational(1, 2));
  CHECK(Rational(1, 2) < one[0].hi);
  CHECK(one[0].width() <= Rational(1, 1000));

  CHECK_THROWS_AS(isolate_roots(lin, Rational(0), Rational(1), Rational(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(isolate_roots(IntPolynomial(), Rational(0), Rational(1), Rational(1, 4)),
                  std::invalid_argument);

  // open-interval contract: roots at the ends are not isolated
  const auto ends = IntPolynomial::from_ints({0, 1}) * IntPolynomial::from_ints({-1, 1});
  CHECK(isolate_roots(ends, Rational(0), Rational(1), Rational(1, 8)).empty());
}

TEST_CASE("isolation agrees with the root count") {
  std::mt19937_64 gen(53);
  std::uniform_int_distribution<int> coeff(-12, 12);
  for (int trial = 0; trial < 80; ++trial) {
    std::vector<BigInt> c(static_cast<std::size_t>(2 + trial % 6));
    for (auto& x : c) x = coeff(gen);
    const IntPolynomial f{std::vector<BigInt>(c)};
    if (f.is_zero() || f.degree() < 1) continue;
    const RootCounter rc(f);
    const int open_count = rc.count_open(Rational(-30), Rational(30));
    const auto intervals = isolate_roots(f, Rational(-30), Rational(30), Rational(1, 64));
    CHECK(static_cast<int>(intervals.size()) == open_count);
    // intervals are disjoint and each holds exactly one root
    for (std::size_t i = 0; i < intervals.size(); ++i) {
      if (i > 0) CHECK(intervals[i - 1].hi <= intervals[i].lo);
      CHECK(rc.count_open(intervals[i].lo, intervals[i].hi) == 1);
    }
  }
}

TEST_CASE("multiplicity notes flag repeated roots") {
  // (2x-1)^2 (4x-1): double root at 1/2, simple at 1/4
  const auto dbl = IntPolynomial::from_ints({-1, 2});
  const auto simple = IntPolynomial::from_ints({-1, 4});
  const auto f = dbl * dbl * simple;
  const auto intervals = isolate_roots(f, Rational(0), Rational(1), Rational(1, 100));
  REQUIRE(intervals.size() == 2);
  CHECK(intervals[0].note == MultiplicityNote::simple);      // 1/4
  CHECK(intervals[1].note == MultiplicityNote::unresolved);  // 1/2
}
