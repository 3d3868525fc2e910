#pragma once

// Finite-level model of X^F_Q = (C^n_Q - Z(F)_Q) / G_Q in homogeneous
// coordinates. The identity component of G acts through the charge matrix,
// t . z = (prod_j t_j^{Q_1j} z_1, ..., prod_j t_j^{Q_nj} z_n), and the power
// maps z -> z^l act coordinatewise.

#include "protoric/fan.hpp"
#include "protoric/lattice.hpp"
#include "protoric/profinite.hpp"
#include "protoric/quotient.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace protoric {

struct HomogeneousPoint {
  std::int64_t level = 1;
  std::vector<PolarComplex> coords;
  friend bool operator==(const HomogeneousPoint&, const HomogeneousPoint&) = default;
};

struct TorusElement {
  std::int64_t level = 1;
  std::vector<PolarComplex> params;  // one per charge-matrix column, all nonzero
  friend bool operator==(const TorusElement&, const TorusElement&) = default;
};

enum class OrbitDecision { same, different, undecided };

inline const char* to_string(OrbitDecision d) {
  switch (d) {
    case OrbitDecision::same: return "same";
    case OrbitDecision::different: return "different";
    case OrbitDecision::undecided: return "undecided";
  }
  return "?";
}

namespace detail {

// Pairwise coprime integers > 1 such that every input is a product of them.
inline std::vector<Integer> coprime_base(std::vector<Integer> xs) {
  std::vector<Integer> base;
  for (auto& x : xs)
    if (x > 1) base.push_back(x);
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    for (std::size_t i = 0; i < base.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
        const Integer g = gcd(base[i], base[j]);
        if (g == 1) continue;
        std::vector<Integer> next;
        for (std::size_t k = 0; k < base.size(); ++k)
          if (k != i && k != j) next.push_back(base[k]);
        for (const Integer& y : std::vector<Integer>{base[i] / g, base[j] / g, g})
          if (y > 1) next.push_back(y);
        base = std::move(next);
        changed = true;
      }
  }
  return base;
}

// Exponents of a positive integer over a coprime base it factors over.
inline std::vector<Integer> exponents_over(Integer x, const std::vector<Integer>& base) {
  std::vector<Integer> e(base.size());
  for (std::size_t k = 0; k < base.size(); ++k)
    while (x % base[k] == 0) {
      x /= base[k];
      ++e[k];
    }
  if (x != 1) throw domain_error("integer does not factor over the coprime base");
  return e;
}

inline std::size_t rational_rank(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  auto a = rows;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace detail

class HomogeneousModel {
 public:
  explicit HomogeneousModel(const Fan& fan)
      : rays_(fan.ray_count()),
        charge_(charge_matrix(fan).q),
        antichain_(discriminant_locus(fan)),
        torsion_free_(group_structure(fan).torsion_free()) {}

  std::size_t ray_count() const noexcept { return rays_; }
  std::size_t torus_rank() const noexcept { return charge_.cols(); }
  const IntMatrix& charge() const noexcept { return charge_; }
  const DiscriminantAntichain& discriminant() const noexcept { return antichain_; }

  /// The zero-coordinate pattern contains a minimal non-cone subset.
  bool in_discriminant(const std::vector<PolarComplex>& coords) const {
    if (coords.size() != rays_)
      throw domain_error("expected " + std::to_string(rays_) + " coordinates, got " + std::to_string(coords.size()));
    return antichain_.contains_member(zero_pattern(coords));
  }

  HomogeneousPoint point(std::int64_t level, std::vector<PolarComplex> coords) const {
    detail::require_positive_level(level, "level");
    if (in_discriminant(coords)) throw domain_error("point lies in the discriminant locus");
    return HomogeneousPoint{level, std::move(coords)};
  }

  TorusElement torus(std::int64_t level, std::vector<PolarComplex> params) const {
    detail::require_positive_level(level, "level");
    if (params.size() != torus_rank())
      throw domain_error("expected " + std::to_string(torus_rank()) + " torus parameters");
    for (const auto& p : params)
      if (p.is_zero()) throw domain_error("torus parameters must be nonzero");
    return TorusElement{level, std::move(params)};
  }

  HomogeneousPoint act(const TorusElement& t, const HomogeneousPoint& z) const {
    if (t.level != z.level) throw domain_error("act: torus element and point are at different levels");
    check_shape(z);
    HomogeneousPoint out = z;
    for (std::size_t i = 0; i < rays_; ++i) {
      PolarComplex factor = PolarComplex::one();
      for (std::size_t j = 0; j < torus_rank(); ++j)
        factor = factor * t.params.at(j).pow(charge_(i, j).convert_to<std::int64_t>());
      out.coords[i] = factor * z.coords[i];
    }
    return out;
  }

  /// (z^l)^{⊗n}: every coordinate to the l-th power.
  HomogeneousPoint power_map(std::int64_t l, const HomogeneousPoint& z) const {
    if (l <= 0) throw domain_error("power_map: exponent must be positive");
    check_shape(z);
    HomogeneousPoint out = z;
    for (auto& c : out.coords) c = c.pow(l);
    return out;
  }

  /// Exact check of (z^l)^{⊗n}(t . z) = m_l^*(t) . (z^l)^{⊗n}(z).
  bool check_equivariance(const TorusElement& t, const HomogeneousPoint& z, std::int64_t l) const {
    TorusElement tl = t;
    for (auto& p : tl.params) p = p.pow(l);
    return power_map(l, act(t, z)) == act(tl, power_map(l, z));
  }

  /// Whether some t in the identity component of G_Q carries z to w.
  /// Modulus ratios factor over a coprime base whose logarithms are
  /// Q-linearly independent, and angles are solved modulo Z^n; when G has
  /// torsion and no such t exists the answer is undecided.
  OrbitDecision same_orbit(const HomogeneousPoint& z, const HomogeneousPoint& w) const {
    check_shape(z);
    check_shape(w);
    if (z.level != w.level) throw domain_error("same_orbit: points are at different levels");
    if (zero_pattern(z.coords) != zero_pattern(w.coords)) return OrbitDecision::different;

    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < rays_; ++i)
      if (!z.coords[i].is_zero()) live.push_back(i);
    if (live.empty()) return OrbitDecision::same;

    const bool related = moduli_related(z, w, live) && angles_related(z, w, live);
    if (related) return OrbitDecision::same;
    return torsion_free_ ? OrbitDecision::different : OrbitDecision::undecided;
  }

 private:
  static RaySet zero_pattern(const std::vector<PolarComplex>& coords) {
    RaySet s = 0;
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (coords[i].is_zero()) s |= RaySet{1} << i;
    return s;
  }

  void check_shape(const HomogeneousPoint& z) const {
    if (z.coords.size() != rays_) throw domain_error("point has the wrong number of coordinates");
  }

  bool moduli_related(const HomogeneousPoint& z, const HomogeneousPoint& w, const std::vector<std::size_t>& live) const {
    std::vector<Rational> ratios;
    std::vector<Integer> parts;
    for (auto i : live) {
      ratios.push_back(w.coords[i].rho() / z.coords[i].rho());
      parts.push_back(numerator(ratios.back()));
      parts.push_back(denominator(ratios.back()));
    }
    const auto base = detail::coprime_base(parts);
    const std::size_t s = torus_rank();
    std::vector<std::vector<Rational>> q_rows;
    for (auto i : live) {
      std::vector<Rational> row;
      for (std::size_t j = 0; j < s; ++j) row.push_back(Rational(charge_(i, j)));
      q_rows.push_back(std::move(row));
    }
    const std::size_t base_rank = detail::rational_rank(q_rows, s);
    // one real linear system per base element; each must be consistent
    for (std::size_t b = 0; b < base.size(); ++b) {
      auto aug = q_rows;
      for (std::size_t r = 0; r < live.size(); ++r) {
        const auto num = detail::exponents_over(numerator(ratios[r]), base);
        const auto den = detail::exponents_over(denominator(ratios[r]), base);
        aug[r].push_back(Rational(num[b] - den[b]));
      }
      if (detail::rational_rank(aug, s + 1) != base_rank) return false;
    }
    return true;
  }

  bool angles_related(const HomogeneousPoint& z, const HomogeneousPoint& w, const std::vector<std::size_t>& live) const {
    // need y with Q_live y ≡ Δτ (mod Z^live): with W spanning the integer left
    // kernel of Q_live this is W Δτ ∈ W Z^live
    const std::size_t s = torus_rank();
    IntMatrix q_live(live.size(), s);
    for (std::size_t r = 0; r < live.size(); ++r)
      for (std::size_t j = 0; j < s; ++j) q_live(r, j) = charge_(live[r], j);
    std::vector<Rational> delta;
    for (auto i : live) delta.push_back(w.coords[i].turns() - z.coords[i].turns());

    const IntMatrix left_kernel = s == 0 ? IntMatrix::identity(live.size())
                                         : integer_kernel(q_live.transpose()).transpose();
    if (left_kernel.rows() == 0) return true;
    IntVector c(left_kernel.rows());
    for (std::size_t r = 0; r < left_kernel.rows(); ++r) {
      Rational acc = 0;
      for (std::size_t k = 0; k < live.size(); ++k) acc += Rational(left_kernel(r, k)) * delta[k];
      if (denominator(acc) != 1) return false;
      c[r] = numerator(acc);
    }
    const SmithForm snf = smith_normal_form(left_kernel);
    const IntVector uc = snf.U * c;
    const auto d = snf.diagonal();
    for (std::size_t r = 0; r < uc.size(); ++r) {
      const Integer dr = r < d.size() ? d[r] : Integer(0);
      if (dr == 0 ? uc[r] != 0 : uc[r] % dr != 0) return false;
    }
    return true;
  }

  std::size_t rays_;
  IntMatrix charge_;
  DiscriminantAntichain antichain_;
  bool torsion_free_;
};

}  // namespace protoric
