#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace protoric {

// Expression templates are off so that `auto` always yields a value.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

/// A lattice element in N or M = Hom(N, Z).
using IntVector = std::vector<Integer>;

// Precondition of an operation violated by otherwise well-formed input.
class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or invalid input data (fan files, expressions, arguments).
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Integer floor_mod(const Integer& a, const Integer& b) {
  return a - b * floor_div(a, b);
}

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / gcd(a, b) * b);
}

inline Integer numerator(const Rational& q) {
  return boost::multiprecision::numerator(q);
}

inline Integer denominator(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

/// Fractional part in [0, 1).
inline Rational frac(const Rational& q) {
  const Integer num = numerator(q);
  const Integer den = denominator(q);
  return Rational(floor_mod(num, den), den);
}

inline Integer floor(const Rational& q) {
  return floor_div(numerator(q), denominator(q));
}

/// Always renders as "p/q" (q >= 1), so "1/1" rather than "1".
inline std::string to_fraction_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Integer power with integer exponent; negative exponents need q != 0.
inline Rational pow(const Rational& q, std::int64_t e) {
  if (e < 0) {
    if (q == 0) throw domain_error("zero raised to a negative power");
    return pow(Rational(1) / q, -e);
  }
  Rational base = q;
  Rational acc = 1;
  auto n = static_cast<std::uint64_t>(e);
  while (n != 0) {
    if (n & 1U) acc *= base;
    n >>= 1U;
    if (n != 0) base *= base;
  }
  return acc;
}

inline Integer pow(const Integer& b, std::uint64_t e) {
  Integer base = b;
  Integer acc = 1;
  while (e != 0) {
    if (e & 1U) acc *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return acc;
}

/// Exact r-th root of a nonnegative integer, or -1 when it is not a perfect power.
inline Integer exact_root(const Integer& n, std::uint64_t r) {
  if (n < 0 || r == 0) return -1;
  if (n < 2 || r == 1) return n;
  Integer lo = 0;
  Integer hi = 1;
  while (pow(hi, r) <= n) hi *= 2;
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (pow(mid, r) <= n)
      lo = mid;
    else
      hi = mid;
  }
  return pow(lo, r) == n ? lo : Integer(-1);
}

/// Parses "p/q", "p" or "-p/q" into an exact rational.
inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& part) {
    const std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (part.size() == start || part.find_first_not_of("0123456789", start) != std::string::npos)
      throw input_error("'" + text + "' is not a rational number");
    return Integer(part[0] == '+' ? part.substr(1) : part);
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  const Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw input_error("'" + text + "' has a zero denominator");
  return Rational(parse_int(text.substr(0, slash)), den);
}

}  // namespace protoric
