#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chebmom {

// Arbitrary-precision signed integer / rational. cpp_rational keeps values in
// lowest terms with a positive denominator, so every arithmetic result is
// exact with no rounding anywhere.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sgn(const BigInt& x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }
inline int sgn(const Rational& x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }

// base^exp by repeated squaring, exp >= 0. Handles negative bases.
inline BigInt ipow(BigInt base, unsigned exp) {
  BigInt result(1);
  while (exp > 0) {
    if (exp & 1u) result *= base;
    base *= base;
    exp >>= 1u;
  }
  return result;
}

inline Rational rpow(const Rational& base, unsigned exp) {
  return Rational(ipow(numerator(base), exp), ipow(denominator(base), exp));
}

inline Rational rabs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

// floor/ceil as exact integers
inline BigInt rfloor(const Rational& x) {
  BigInt q = numerator(x) / denominator(x);
  if (numerator(x) < 0 && q * denominator(x) != numerator(x)) --q;
  return q;
}

inline BigInt rceil(const Rational& x) {
  BigInt q = numerator(x) / denominator(x);
  if (numerator(x) > 0 && q * denominator(x) != numerator(x)) ++q;
  return q;
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (ch < '0' || ch > '9') return false;
  return true;
}

inline BigInt parse_integer(std::string_view s, std::string_view original) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("not a number: '" + std::string(original) + "'");
  BigInt value{std::string(s)};
  if (negative) value = -value;
  return value;
}

}  // namespace detail

// Parses "num/den", plain integers, and decimal literals ("0.3", "-1.25e-3").
// Decimals convert exactly through powers of ten; no floating point involved.
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  const std::string original(text);

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = detail::parse_integer(text.substr(0, slash), original);
    BigInt den = detail::parse_integer(text.substr(slash + 1), original);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + original + "'");
    return Rational(num, den);
  }

  std::string_view s = text;
  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  long long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exppart = s.substr(e + 1);
    s = s.substr(0, e);
    bool eneg = false;
    if (!exppart.empty() && (exppart.front() == '+' || exppart.front() == '-')) {
      eneg = exppart.front() == '-';
      exppart.remove_prefix(1);
    }
    if (!detail::all_digits(exppart) || exppart.size() > 6)
      throw std::invalid_argument("bad exponent: '" + original + "'");
    exp10 = std::stoll(std::string(exppart));
    if (eneg) exp10 = -exp10;
  }

  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view intpart = s.substr(0, dot);
    std::string_view fracpart = s.substr(dot + 1);
    if (intpart.empty() && fracpart.empty())
      throw std::invalid_argument("not a number: '" + original + "'");
    if (!intpart.empty() && !detail::all_digits(intpart))
      throw std::invalid_argument("not a number: '" + original + "'");
    if (!fracpart.empty() && !detail::all_digits(fracpart))
      throw std::invalid_argument("not a number: '" + original + "'");
    digits = std::string(intpart) + std::string(fracpart);
    exp10 -= static_cast<long long>(fracpart.size());
  } else {
    if (!detail::all_digits(s)) throw std::invalid_argument("not a number: '" + original + "'");
    digits = std::string(s);
  }
  if (digits.empty()) throw std::invalid_argument("not a number: '" + original + "'");

  BigInt mantissa(digits);
  if (negative) mantissa = -mantissa;
  if (exp10 >= 0) return Rational(mantissa * ipow(10, static_cast<unsigned>(exp10)), 1);
  return Rational(mantissa, ipow(10, static_cast<unsigned>(-exp10)));
}

// Renders in lowest terms: "num/den", or just "num" for integers. Output
// round-trips through parse_rational exactly.
inline std::string render_rational(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

// Fixed-point decimal rendering with `digits` places, rounded to nearest
// (ties away from zero). Pure integer arithmetic, so output is identical on
// every platform.
inline std::string to_decimal_string(const Rational& x, int digits) {
  if (digits < 0) throw std::invalid_argument("digits must be >= 0");
  const bool negative = x < 0;
  BigInt num = negative ? BigInt(-numerator(x)) : numerator(x);
  const BigInt& den = denominator(x);
  BigInt scaled = num * ipow(10, static_cast<unsigned>(digits));
  BigInt q = scaled / den;
  BigInt r = scaled % den;
  if (2 * r >= den) ++q;

  std::string s = q.str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  if (negative && q != 0) s.insert(0, "-");
  return s;
}

}  // namespace chebmom
