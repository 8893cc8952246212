#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "chebmom/argmax.hpp"
#include "chebmom/planner.hpp"
#include "helpers.hpp"

using namespace chebmom;
using testutil::random_unit_rational;

TEST_CASE("bound examples") {
  CHECK(cheb_bound(2000, Rational(1, 20), 1) == Rational(1, 20));
  CHECK(cheb_bound(775, Rational(1, 20), 2) == Rational(28805200, 577200625));
  CHECK(cheb_bound(775, Rational(1, 20), 2) <= Rational(1, 20));
  CHECK(cheb_bound(1, Rational(1), 1) == Rational(1, 4));
  CHECK_THROWS_AS(cheb_bound(10, Rational(0), 1), std::invalid_argument);
  CHECK_THROWS_AS(cheb_bound(10, Rational(-1, 2), 1), std::invalid_argument);
}

TEST_CASE("order-2 closed form 1/(4 n eps^2)") {
  std::mt19937_64 gen(61);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 3000);
    const Rational eps = random_unit_rational(gen);
    CHECK(cheb_bound(n, eps, 1) == Rational(1) / (4 * Rational(n) * eps * eps));
  }
}

TEST_CASE("large-n bound routing stays consistent") {
  // the composition route kicks in past n = 10^5; cross-check at the switch
  for (int n : {99999, 100001, 250000}) {
    const Rational direct = moment_half_binomsum(n, 3).value /
                            rpow(Rational(n) * Rational(1, 100), 6);
    CHECK(cheb_bound(n, Rational(1, 100), 3) == direct);
  }
}

TEST_CASE("bound profile") {
  const auto trivial = bound_profile(1, Rational(1, 2), 3);
  REQUIRE(trivial.rows.size() == 3);
  for (const auto& row : trivial.rows) CHECK(row.bound == 1);
  CHECK(trivial.best_m == 1);

  const auto p775 = bound_profile(775, Rational(1, 20), 6);
  CHECK(p775.rows[1].bound == cheb_bound(775, Rational(1, 20), 2));
  CHECK(p775.best_m == 4);

  const auto p2000 = bound_profile(2000, Rational(1, 20), 15);
  CHECK(p2000.best_m == 10);  // rule of thumb: near 2 ntilde = 10

  const auto capped = bound_profile(2000, Rational(1, 20), 15, 5);
  CHECK(capped.best_m == 5);  // min over selectable rows only
  CHECK(capped.rows[4].selectable);
  CHECK_FALSE(capped.rows[5].selectable);
  for (std::size_t i = 0; i < capped.rows.size(); ++i)
    CHECK(capped.rows[i].bound == p2000.rows[i].bound);
}

TEST_CASE("minimal sample sizes match the polling numbers") {
  const auto m1 = min_sample_size(Rational(1, 20), Rational(1, 20), 1);
  CHECK(m1.n_star == 2000);
  CHECK(m1.achieved_bound == Rational(1, 20));
  CHECK(m1.effective_sample_size == Rational(5));

  const auto m2 = min_sample_size(Rational(1, 20), Rational(1, 20), 2);
  CHECK(m2.n_star == 775);
  CHECK(cheb_bound(774, Rational(1, 20), 2) > Rational(1, 20));
  CHECK(cheb_bound(775, Rational(1, 20), 2) <= Rational(1, 20));

  CHECK(min_sample_size(Rational(1, 2), Rational(1), 1).n_star == 1);
  CHECK_THROWS_AS(min_sample_size(Rational(1, 20), Rational(0), 1), std::invalid_argument);
  CHECK_THROWS_AS(min_sample_size(Rational(3, 2), Rational(1, 2), 1), std::invalid_argument);
}

TEST_CASE("plan boundary invariant") {
  std::mt19937_64 gen(67);
  for (int trial = 0; trial < 12; ++trial) {
    const Rational eps(1 + static_cast<int>(gen() % 8), 20);
    const Rational delta(1 + static_cast<int>(gen() % 10), 40);
    const int m = 1 + static_cast<int>(gen() % 4);
    if (eps >= 1) continue;
    const auto plan = min_sample_size(eps, delta, m);
    CHECK(plan.achieved_bound <= delta);
    if (plan.n_star > 1)
      CHECK(cheb_bound(static_cast<int>(plan.n_star) - 1, eps, m) > delta);
  }
}

TEST_CASE("search ceiling raises a resource error") {
  CHECK_THROWS_AS(min_sample_size(Rational(1, 10000), Rational(1, 1000), 1), ResourceLimitError);
}

TEST_CASE("best plan over orders") {
  PlanQuery q;
  q.epsilon = Rational(1, 20);
  q.delta = Rational(1, 20);

  q.m = 1;
  CHECK(best_plan(q).n_star == 2000);
  q.m = 2;
  CHECK(best_plan(q).n_star == 775);

  q.m.reset();
  q.m_cap = 2;
  const auto cap2 = best_plan(q);
  CHECK(cap2.n_star == 775);
  CHECK(cap2.m_used == 2);

  q.m_cap = 10;
  const auto cap10 = best_plan(q);
  CHECK(cap10.n_star == 669);
  CHECK(cap10.m_used == 3);
  CHECK(cap10.n_star <= 775);
}

TEST_CASE("exact tails") {
  CHECK(exact_tail(1, Rational(1, 2), Rational(2, 5)) == 1);
  CHECK(exact_tail(2, Rational(1, 2), Rational(2, 5)) == Rational(1, 2));
  CHECK(exact_tail(10, Rational(3, 10), Rational(1, 5)) ==
        Rational(BigInt(755965123), BigInt("10000000000")));
  const Rational big = exact_tail(2000, Rational(1, 2), Rational(1, 20));
  CHECK(big < Rational(1, 20));
  CHECK(big < Rational(1, 10000));  // Chebyshev is very conservative here
  CHECK(exact_tail(5, Rational(0), Rational(1, 10)) == 0);
  CHECK(exact_tail(5, Rational(1), Rational(1, 10)) == 0);
  CHECK_THROWS_AS(exact_tail(5, Rational(2), Rational(1, 10)), std::invalid_argument);
  CHECK_THROWS_AS(exact_tail(5, Rational(1, 2), Rational(0)), std::invalid_argument);
}

TEST_CASE("bound validity on a small grid") {
  const int n = 10;
  const int mn = compute_mn(n, 10).m_n;
  REQUIRE(mn >= 1);
  for (const Rational eps : {Rational(1, 10), Rational(1, 20)}) {
    for (int m = 1; m <= mn; ++m) {
      const Rational bound = cheb_bound(n, eps, m);
      for (int j = 0; j <= 40; ++j) CHECK(exact_tail(n, Rational(j, 40), eps) <= bound);
    }
  }
}

TEST_CASE("asymptotic profile and the rule of thumb") {
  const auto one = asymptotic_profile(Rational(1), 5);
  CHECK(one.m_star == 2);
  CHECK(one.rows[0].b == Rational(1, 4));
  CHECK(one.rows[1].b == Rational(3, 16));
  CHECK(one.rows[2].b == Rational(15, 64));

  CHECK(asymptotic_profile(Rational(1, 8), 5).m_star == 1);
  const auto five = asymptotic_profile(Rational(5), 15);
  CHECK(five.m_star == 10);

  CHECK(rule_of_thumb_order(Rational(1)) == 4);
  CHECK(rule_of_thumb_order(Rational(5)) == 20);
  CHECK(rule_of_thumb_order(Rational(1, 4)) == 2);
  CHECK(rule_of_thumb_order(Rational(3, 4)) == 2);  // tie 2n-1/2 = 1: smaller order
  CHECK_THROWS_AS(rule_of_thumb_order(Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(asymptotic_profile(Rational(-1), 3), std::invalid_argument);
}

TEST_CASE("ratio identity and the decreasing criterion") {
  for (const Rational ntilde : {Rational(1, 4), Rational(1), Rational(5), Rational(100)}) {
    const auto prof = asymptotic_profile(ntilde, 21);
    for (int m = 1; m <= 20; ++m) {
      const Rational ratio = prof.rows[m].b / prof.rows[m - 1].b;
      CHECK(ratio == Rational(2 * m + 1) / (4 * ntilde));
      // decreasing exactly while m <= 2 ntilde - 1/2
      if (Rational(m) <= 2 * ntilde - Rational(1, 2))
        CHECK(prof.rows[m].b <= prof.rows[m - 1].b);
      else
        CHECK(prof.rows[m].b > prof.rows[m - 1].b);
    }
  }
}

TEST_CASE("finite best order approaches the asymptotic one") {
  for (int n : {2000, 4000}) {
    const Rational eps(1, 20);
    const auto prof = bound_profile(n, eps, 25);
    const auto asym = asymptotic_profile(Rational(n) * eps * eps, 25);
    CHECK(std::abs(prof.best_m - asym.m_star) <= 1);
  }
}
