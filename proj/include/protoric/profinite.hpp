#pragma once

// Finite-level arithmetic for the profinite integers Ẑ = lim Z/MZ, the
// adelic solenoid S¹_Q and the completions C*_Q, C_Q of the power maps
// z -> z^n. A point is truncated at a single top level M: the coordinate at
// any d | M is determined by the level-M one, so compatibility holds by
// construction. Angles are stored in turns so that everything stays rational.

#include "protoric/core.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace protoric {

namespace detail {

inline void require_positive_level(std::int64_t m, const char* what) {
  if (m <= 0) throw domain_error(std::string(what) + " must be a positive integer");
}

inline void require_divides(std::int64_t d, std::int64_t m) {
  if (d <= 0 || m % d != 0)
    throw domain_error(std::to_string(d) + " does not divide " + std::to_string(m));
}

}  // namespace detail

/// Residue class of Ẑ truncated at level M.
class ProfiniteInt {
 public:
  ProfiniteInt(std::int64_t level, std::int64_t value) : level_(level) {
    detail::require_positive_level(level, "level");
    residue_ = ((value % level) + level) % level;
  }

  std::int64_t level() const noexcept { return level_; }
  std::int64_t residue() const noexcept { return residue_; }

  friend bool operator==(const ProfiniteInt&, const ProfiniteInt&) = default;

  friend std::ostream& operator<<(std::ostream& os, const ProfiniteInt& x) {
    return os << "level=" << x.level_ << " residue=" << x.residue_;
  }

 private:
  std::int64_t level_;
  std::int64_t residue_ = 0;
};

/// Sum at a common level. Different levels have no canonical common lift
/// without a choice, so they are rejected; refine first.
inline ProfiniteInt pf_add(const ProfiniteInt& x, const ProfiniteInt& y) {
  if (x.level() != y.level())
    throw domain_error("pf_add: levels " + std::to_string(x.level()) + " and " + std::to_string(y.level()) +
                       " differ; refine explicitly first");
  return ProfiniteInt(x.level(), (x.residue() + y.residue()) % x.level());
}

inline ProfiniteInt pf_negate(const ProfiniteInt& x) { return ProfiniteInt(x.level(), -x.residue()); }

/// Bonding map Z/MZ -> Z/dZ.
inline std::int64_t pf_project(const ProfiniteInt& x, std::int64_t d) {
  detail::require_divides(d, x.level());
  return x.residue() % d;
}

/// One of the M'/M lifts of x to level M', selected by branch k.
inline ProfiniteInt pf_refine(const ProfiniteInt& x, std::int64_t new_level, std::int64_t branch) {
  detail::require_divides(x.level(), new_level);
  if (branch < 0 || branch >= new_level / x.level()) throw domain_error("pf_refine: branch index out of range");
  return ProfiniteInt(new_level, x.residue() + branch * x.level());
}

/// rho * e^{2 pi i turns} with exact rational modulus and angle.
class PolarComplex {
 public:
  PolarComplex() = default;
  PolarComplex(Rational rho, Rational turns) : rho_(std::move(rho)), turns_(frac(turns)) {
    if (rho_ < 0) throw domain_error("modulus must be nonnegative");
    if (rho_ == 0) turns_ = 0;
  }

  static PolarComplex zero() { return PolarComplex(0, 0); }
  static PolarComplex one() { return PolarComplex(1, 0); }

  const Rational& rho() const noexcept { return rho_; }
  const Rational& turns() const noexcept { return turns_; }
  bool is_zero() const noexcept { return rho_ == 0; }

  PolarComplex pow(std::int64_t e) const {
    if (e < 0 && is_zero()) throw domain_error("zero has no negative powers");
    return PolarComplex(protoric::pow(rho_, e), turns_ * Rational(e));
  }

  PolarComplex inverse() const { return pow(-1); }

  friend PolarComplex operator*(const PolarComplex& a, const PolarComplex& b) {
    return PolarComplex(a.rho_ * b.rho_, a.turns_ + b.turns_);
  }

  friend bool operator==(const PolarComplex&, const PolarComplex&) = default;

  std::string str() const { return "rho=" + to_fraction_string(rho_) + " turns=" + to_fraction_string(turns_); }

  friend std::ostream& operator<<(std::ostream& os, const PolarComplex& z) { return os << z.str(); }

 private:
  Rational rho_ = 1;
  Rational turns_ = 0;
};

/// Covering map p_{n,m}(z) = z^{m/n} for n | m.
inline PolarComplex cover_map(std::int64_t n, std::int64_t m, const PolarComplex& z) {
  detail::require_positive_level(n, "n");
  detail::require_divides(n, m);
  return z.pow(m / n);
}

/// A point of C_Q (or C*_Q, S¹_Q) truncated at level M; its level-d
/// coordinate for d | M is top^{M/d}.
class SolenoidPoint {
 public:
  SolenoidPoint(std::int64_t level, PolarComplex top) : level_(level), top_(std::move(top)) {
    detail::require_positive_level(level, "level");
  }

  static SolenoidPoint identity(std::int64_t level) { return SolenoidPoint(level, PolarComplex::one()); }

  std::int64_t level() const noexcept { return level_; }
  const PolarComplex& top() const noexcept { return top_; }

  PolarComplex coordinate(std::int64_t d) const {
    detail::require_divides(d, level_);
    return top_.pow(level_ / d);
  }

  friend SolenoidPoint operator*(const SolenoidPoint& a, const SolenoidPoint& b) {
    if (a.level_ != b.level_) throw domain_error("solenoid product: levels differ");
    return SolenoidPoint(a.level_, a.top_ * b.top_);
  }

  friend bool operator==(const SolenoidPoint&, const SolenoidPoint&) = default;

  std::string str() const { return "level=" + std::to_string(level_) + " " + top_.str(); }

  friend std::ostream& operator<<(std::ostream& os, const SolenoidPoint& z) { return os << z.str(); }

 private:
  std::int64_t level_;
  PolarComplex top_;
};

/// φ : Ẑ -> S¹_Q, landing in the fiber over 1 of the level-1 projection.
inline SolenoidPoint phi(const ProfiniteInt& a) {
  return SolenoidPoint(a.level(), PolarComplex(1, Rational(a.residue(), a.level())));
}

/// Baseleaf ν : R -> S¹_Q at level M; t is measured in full turns of the
/// base circle, so ν(2πn) is nu(n, M).
inline SolenoidPoint nu(const Rational& turns, std::int64_t level) {
  detail::require_positive_level(level, "level");
  return SolenoidPoint(level, PolarComplex(1, turns / Rational(level)));
}

/// exp(a, θ) = φ(a) · ν(θ), at the level of a.
inline SolenoidPoint sol_exp(const ProfiniteInt& a, const Rational& turns) {
  return phi(a) * nu(turns, a.level());
}

/// Level M' lift of z choosing the branch-k root of its top coordinate.
/// The modulus root must be exact; non-perfect powers are rejected.
inline SolenoidPoint refine(const SolenoidPoint& z, std::int64_t new_level, std::int64_t branch) {
  detail::require_divides(z.level(), new_level);
  const std::int64_t r = new_level / z.level();
  if (branch < 0 || branch >= r) throw domain_error("refine: branch index out of range");
  const Rational& rho = z.top().rho();
  const Integer num = exact_root(numerator(rho), static_cast<std::uint64_t>(r));
  const Integer den = exact_root(denominator(rho), static_cast<std::uint64_t>(r));
  if (num < 0 || den < 0)
    throw domain_error("refine: modulus " + to_fraction_string(rho) + " is not a perfect " + std::to_string(r) +
                       "-th power of a rational");
  if (z.top().is_zero()) return SolenoidPoint(new_level, PolarComplex::zero());
  return SolenoidPoint(new_level, PolarComplex(Rational(num, den), (z.top().turns() + branch) / Rational(r)));
}

/// Inverse of φ on the fiber over 1: the unique a with φ(a) = z, if any.
inline std::optional<ProfiniteInt> phi_inverse(const SolenoidPoint& z) {
  if (z.coordinate(1) != PolarComplex::one()) return std::nullopt;
  const Rational a = z.top().turns() * Rational(z.level());
  if (denominator(a) != 1) return std::nullopt;
  return ProfiniteInt(z.level(), numerator(a).convert_to<std::int64_t>());
}

}  // namespace protoric
