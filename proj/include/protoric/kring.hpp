#pragma once

// K(CP¹_Q) ≅ Z[x^q : q ∈ Q] / ((x^q - 1)(x^p - 1) : q, p ∈ Q).
//
// Every element has the normal form (a, r): a is the augmentation (sum of
// coefficients) and r the exponent-weighted sum Σ c_q q, with x^q -> (1, q).
// The product is (a, r)(b, s) = (ab, as + br). The normal form is checked
// against a brute-force rewriting oracle in the test suite.

#include "protoric/core.hpp"

#include <cctype>
#include <cstdint>
#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

namespace protoric {

/// Finite Z-linear combination of monomials x^q; no zero coefficients stored.
class FormalSum {
 public:
  FormalSum() = default;

  static FormalSum monomial(const Rational& exponent, const Integer& coefficient = 1) {
    FormalSum s;
    s.add_term(exponent, coefficient);
    return s;
  }

  static FormalSum constant(const Integer& c) { return monomial(0, c); }

  void add_term(const Rational& exponent, const Integer& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const std::map<Rational, Integer>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  friend FormalSum operator+(FormalSum a, const FormalSum& b) {
    for (const auto& [q, c] : b.terms_) a.add_term(q, c);
    return a;
  }

  friend FormalSum operator-(FormalSum a, const FormalSum& b) {
    for (const auto& [q, c] : b.terms_) a.add_term(q, -c);
    return a;
  }

  friend FormalSum operator*(const FormalSum& a, const FormalSum& b) {
    FormalSum out;
    for (const auto& [q, c] : a.terms_)
      for (const auto& [p, d] : b.terms_) out.add_term(q + p, c * d);
    return out;
  }

  friend bool operator==(const FormalSum&, const FormalSum&) = default;

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [q, c] : terms_) {
      const bool negative = c < 0;
      const Integer mag = negative ? Integer(-c) : c;
      if (out.empty())
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      if (q == 0) {
        out += mag.str();
        continue;
      }
      if (mag != 1) out += mag.str() + "*";
      out += "x";
      if (q != 1) out += denominator(q) == 1 ? "^" + numerator(q).str() : "^(" + to_fraction_string(q) + ")";
    }
    return out;
  }

 private:
  std::map<Rational, Integer> terms_;
};

struct KRingElement {
  Integer rank;    // a
  Rational cls;    // r

  friend bool operator==(const KRingElement&, const KRingElement&) = default;

  friend KRingElement operator+(const KRingElement& u, const KRingElement& v) {
    return {u.rank + v.rank, u.cls + v.cls};
  }
  friend KRingElement operator-(const KRingElement& u, const KRingElement& v) {
    return {u.rank - v.rank, u.cls - v.cls};
  }

  std::string str() const {
    std::string c = denominator(cls) == 1 ? numerator(cls).str() : to_fraction_string(cls);
    return "rank=" + rank.str() + " class=" + c;
  }

  friend std::ostream& operator<<(std::ostream& os, const KRingElement& e) { return os << e.str(); }
};

inline KRingElement reduce(const FormalSum& s) {
  KRingElement e{0, 0};
  for (const auto& [q, c] : s.terms()) {
    e.rank += c;
    e.cls += Rational(c) * q;
  }
  return e;
}

inline KRingElement multiply(const KRingElement& u, const KRingElement& v) {
  return {u.rank * v.rank, Rational(u.rank) * v.cls + Rational(v.rank) * u.cls};
}

/// Membership in the image of K(CP¹) under the level-n projection,
/// Z[x^{1/n}] / ((x^{1/n} - 1)^2): exactly the elements with r ∈ (1/n)Z.
inline bool level_image(std::int64_t n, const KRingElement& e) {
  if (n <= 0) throw domain_error("level must be a positive integer");
  return denominator(e.cls * Rational(n)) == 1;
}

/// Smallest level whose image contains e.
inline Integer minimal_level(const KRingElement& e) { return denominator(e.cls); }

namespace detail {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  FormalSum parse() {
    FormalSum out;
    skip_space();
    if (at_end()) fail("empty expression");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      parse_term(out, sign);
      first = false;
      skip_space();
    }
    return out;
  }

 private:
  // term := integer | integer ['*'] monomial | monomial
  // monomial := 'x' [ '^' ( integer | '(' ['-'] integer ['/' integer] ')' ) ]
  void parse_term(FormalSum& out, int sign) {
    Integer coefficient = 1;
    bool has_number = false;
    if (std::isdigit(static_cast<unsigned char>(peek())) != 0) {
      coefficient = parse_integer();
      has_number = true;
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
        if (peek() != 'x') fail("expected 'x' after '*'");
      }
    }
    if (peek() != 'x') {
      if (!has_number) fail("expected a number or 'x'");
      out.add_term(0, coefficient * sign);
      return;
    }
    ++pos_;
    skip_space();
    Rational exponent = 1;
    if (peek() == '^') {
      ++pos_;
      skip_space();
      if (peek() == '(') {
        ++pos_;
        skip_space();
        int esign = 1;
        if (peek() == '-' || peek() == '+') {
          esign = get() == '-' ? -1 : 1;
          skip_space();
        }
        Integer num = parse_integer();
        Integer den = 1;
        skip_space();
        if (peek() == '/') {
          ++pos_;
          skip_space();
          den = parse_integer();
          if (den == 0) fail("zero denominator in exponent");
          skip_space();
        }
        if (peek() != ')') fail("expected ')'");
        ++pos_;
        exponent = Rational(num * esign, den);
      } else {
        int esign = 1;
        if (peek() == '-') {
          ++pos_;
          esign = -1;
        }
        exponent = Rational(parse_integer() * esign);
      }
    }
    out.add_term(exponent, coefficient * sign);
  }

  Integer parse_integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())) != 0) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())) != 0) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw input_error("expression: " + what + " at position " + std::to_string(pos_ + 1));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses expressions such as "3*x^(1/2) - x^(2/3) + 1".
inline FormalSum parse_formal_sum(std::string_view text) { return detail::ExpressionParser(text).parse(); }

}  // namespace protoric
