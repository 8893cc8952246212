#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "chebmom/moments.hpp"
#include "chebmom/polynomial.hpp"
#include "helpers.hpp"

using namespace chebmom;
using testutil::random_unit_rational;

TEST_CASE("f_term values and parity at p = 1/2") {
  const Rational half(1, 2);
  CHECK(f_term(2, half) == Rational(1, 4));
  CHECK(f_term(3, half) == 0);
  CHECK(f_term(1, Rational(1, 3)) == 0);
  for (int mu = 1; mu <= 12; ++mu) {
    if (mu % 2 == 0)
      CHECK(f_term(mu, half) == Rational(1, ipow(2, mu)));
    else
      CHECK(f_term(mu, half) == 0);
  }
  CHECK_THROWS_AS(f_term(2, Rational(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(f_term(0, Rational(1, 2)), std::invalid_argument);
}

TEST_CASE("f_term_derivative values and parity at p = 1/2") {
  const Rational half(1, 2);
  CHECK(f_term_derivative(2, half) == 0);
  CHECK(f_term_derivative(3, half) == Rational(-1, 2));
  CHECK(f_term_derivative(1, Rational(1, 4)) == 0);
  for (int mu = 1; mu <= 12; ++mu) {
    if (mu % 2 == 0)
      CHECK(f_term_derivative(mu, half) == 0);
    else
      CHECK(f_term_derivative(mu, half) == Rational(-2 * (mu - 1), ipow(2, mu)));
  }
  CHECK_THROWS_AS(f_term_derivative(2, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(f_term_derivative(2, Rational(1)), std::invalid_argument);
}

namespace {

// f_i(mu, p) as an exact integer polynomial in p, built independently:
// p(1-p)^mu + (1-p)(-p)^mu
IntPolynomial f_term_poly(int mu) {
  const IntPolynomial p = IntPolynomial::from_ints({0, 1});
  const IntPolynomial q = IntPolynomial::from_ints({1, -1});
  const IntPolynomial minus_p = IntPolynomial::from_ints({0, -1});
  IntPolynomial qpow = IntPolynomial::from_ints({1});
  IntPolynomial mppow = IntPolynomial::from_ints({1});
  for (int i = 0; i < mu; ++i) {
    qpow = qpow * q;
    mppow = mppow * minus_p;
  }
  return p * qpow + q * mppow;
}

}  // namespace

TEST_CASE("f_term_derivative equals the symbolic derivative exactly") {
  std::mt19937_64 gen(7);
  for (int mu = 1; mu <= 9; ++mu) {
    const IntPolynomial fprime = f_term_poly(mu).derivative();
    for (int trial = 0; trial < 20; ++trial) {
      const Rational p = random_unit_rational(gen);
      CHECK(f_term_derivative(mu, p) == fprime.eval(p));
    }
  }
}

TEST_CASE("f_term_derivative agrees with a central finite difference") {
  // exact arithmetic: fd = f' + h^2 f'''(xi)/6, so |fd - f'| <= h^2 C / 6
  // with C = sum_j |c_j| j(j-1)(j-2) bounding |f'''| on [0,1]
  std::mt19937_64 gen(11);
  const Rational h(1, 1024);
  for (int mu = 2; mu <= 7; ++mu) {
    const IntPolynomial f = f_term_poly(mu);
    Rational c_bound(0);
    const auto& coeffs = f.coefficients();
    for (std::size_t j = 3; j < coeffs.size(); ++j) {
      BigInt a = coeffs[j] < 0 ? BigInt(-coeffs[j]) : coeffs[j];
      c_bound += Rational(a * BigInt(j * (j - 1) * (j - 2)));
    }
    for (int trial = 0; trial < 20; ++trial) {
      Rational p = random_unit_rational(gen, 500);
      if (p <= h || p >= 1 - h) p = Rational(1, 3);
      const Rational fd = (f_term(mu, p + h) - f_term(mu, p - h)) / (2 * h);
      const Rational err = rabs(fd - f_term_derivative(mu, p));
      CHECK(err <= h * h * c_bound / 6);
    }
  }
}

TEST_CASE("half-moment examples") {
  for (int n : {1, 2, 5, 17, 100}) CHECK(moment_half_composition(n, 1).value == Rational(n, 4));
  CHECK(moment_half_composition(1, 3).value == Rational(1, 64));
  CHECK(moment_half_composition(2, 2).value == Rational(1, 2));
  CHECK(moment_half_binomsum(2, 3).value == Rational(1, 2));
  CHECK(moment_half_binomsum(1, 2).value == Rational(1, 16));
  CHECK(moment_half_binomsum(3, 2).value == Rational(21, 16));
  CHECK_THROWS_AS(moment_half_binomsum(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(moment_half_composition(1, 0), std::invalid_argument);
}

TEST_CASE("general-p moment examples") {
  // E S_1^4(p) = p - 4p^2 + 6p^3 - 3p^4
  std::mt19937_64 gen(13);
  for (int trial = 0; trial < 10; ++trial) {
    const Rational p = random_unit_rational(gen);
    const Rational expected =
        p - 4 * rpow(p, 2) + 6 * rpow(p, 3) - 3 * rpow(p, 4);
    CHECK(moment_general(1, 2, p).value == expected);
  }
  CHECK(moment_general(5, 3, Rational(0)).value == 0);
  CHECK(moment_general(5, 3, Rational(1)).value == 0);
  CHECK(moment_general(3, 2, Rational(1, 3)).value == Rational(10, 9));
  CHECK_THROWS_AS(moment_general(3, 2, Rational(7, 5)), std::invalid_argument);
}

TEST_CASE("brute-force oracle examples and cap") {
  CHECK(moment_bruteforce(2, 2, Rational(1, 2)).value == Rational(1, 2));
  CHECK(moment_bruteforce(1, 1, Rational(1, 4)).value == Rational(3, 16));
  CHECK(moment_bruteforce(3, 1, Rational(1, 2)).value == Rational(3, 4));
  CHECK_THROWS_AS(moment_bruteforce(21, 1, Rational(1, 2)), ResourceLimitError);
}

TEST_CASE("all five half-moment routes agree on a small grid") {
  for (int n = 1; n <= 8; ++n) {
    for (int m = 1; m <= 5; ++m) {
      const Rational v = moment_half_binomsum(n, m).value;
      CHECK(moment_half_composition(n, m).value == v);
      CHECK(moment_half_recurrence(n, m).value == v);
      CHECK(moment_general(n, m, Rational(1, 2)).value == v);
      CHECK(moment_bruteforce(n, m, Rational(1, 2)).value == v);
    }
  }
}

TEST_CASE("composition expansion route agrees with the definition route") {
  std::mt19937_64 gen(17);
  for (int n = 1; n <= 6; ++n) {
    for (int m = 1; m <= 4; ++m) {
      const Rational p = random_unit_rational(gen);
      CHECK(moment_general_composition(n, m, p) == moment_general(n, m, p).value);
    }
  }
}

TEST_CASE("symmetry, boundary vanishing and range") {
  std::mt19937_64 gen(19);
  for (int n = 1; n <= 7; ++n) {
    for (int m = 1; m <= 5; ++m) {
      const Rational p = random_unit_rational(gen);
      CHECK(moment_general(n, m, p).value == moment_general(n, m, 1 - p).value);
      CHECK(moment_general(n, m, Rational(0)).value == 0);
      CHECK(moment_general(n, m, Rational(1)).value == 0);
      const Rational half_val = moment_half_binomsum(n, m).value;
      CHECK(half_val > 0);
      CHECK(half_val <= rpow(Rational(n, 2), 2 * m));
    }
  }
}

TEST_CASE("Lyapunov norm monotonicity") {
  for (int n = 1; n <= 10; ++n) {
    for (int m = 1; m <= 7; ++m) {
      const Rational a = moment_half_binomsum(n, m).value;
      const Rational b = moment_half_binomsum(n, m + 1).value;
      CHECK(rpow(a, m + 1) <= rpow(b, m));
    }
  }
}

TEST_CASE("gaussian even moments and the CLT rate at moderate n") {
  CHECK(gaussian_even_moment(0) == 1);
  CHECK(gaussian_even_moment(1) == 1);
  CHECK(gaussian_even_moment(2) == 3);
  CHECK(gaussian_even_moment(3) == 15);
  CHECK(gaussian_even_moment(5) == 945);
  CHECK_THROWS_AS(gaussian_even_moment(-1), std::invalid_argument);

  const int n = 2000;
  for (int m = 1; m <= 3; ++m) {
    const Rational ratio =
        moment_half_binomsum(n, m).value / rpow(Rational(n, 4), m) / gaussian_even_moment(m);
    CHECK(rabs(ratio - 1) < Rational(1, 100));
  }
}
