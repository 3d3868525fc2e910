#pragma once

// Rational polyhedral cones, their duals (double description) and Hilbert
// bases of the saturated semigroups cone ∩ Z^n (Gordon's lemma).

#include "protoric/fan.hpp"
#include "protoric/lattice.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <iterator>
#include <set>
#include <vector>

namespace protoric {

/// Graded-lexicographic order: smaller L1 norm first, ties broken by
/// lexicographically larger vector first.
inline bool graded_lex_less(const IntVector& a, const IntVector& b) {
  Integer na = 0;
  Integer nb = 0;
  for (const auto& x : a) na += abs(x);
  for (const auto& x : b) nb += abs(x);
  if (na != nb) return na < nb;
  return b < a;
}

inline void sort_graded_lex(std::vector<IntVector>& vs) {
  std::sort(vs.begin(), vs.end(), graded_lex_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

/// A cone in Z^rank given by generators. Generators are stored primitive and
/// without duplicates; an empty generator list is the zero cone.
class RationalCone {
 public:
  RationalCone(std::size_t ambient_rank, const std::vector<IntVector>& generators) : rank_(ambient_rank) {
    if (ambient_rank == 0) throw input_error("cone ambient rank must be positive");
    for (const auto& g : generators) {
      if (g.size() != ambient_rank) throw input_error("cone generator has wrong length");
      IntVector p = primitive(g);
      if (std::find(gens_.begin(), gens_.end(), p) == gens_.end()) gens_.push_back(std::move(p));
    }
  }

  std::size_t ambient_rank() const noexcept { return rank_; }
  const std::vector<IntVector>& generators() const noexcept { return gens_; }
  std::size_t dimension() const { return rank_of_vectors(gens_, rank_); }

 private:
  std::size_t rank_;
  std::vector<IntVector> gens_;
};

namespace detail {

inline std::vector<std::size_t> intersect(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline IntVector combine(const Integer& ka, const IntVector& a, const Integer& kb, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ka * a[i] + kb * b[i];
  return out;
}

// Orthogonal projection of v onto the complement of span(basis), scaled back
// to a primitive integer vector. Returns the zero vector if v lies in the span.
inline IntVector project_off(const IntVector& v, const std::vector<IntVector>& basis) {
  if (basis.empty()) return is_zero(v) ? v : primitive(v);
  const std::size_t l = basis.size();
  RatMatrix gram(l, RatVector(l));
  RatVector rhs(l);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) gram[i][j] = Rational(dot(basis[i], basis[j]));
    rhs[i] = Rational(dot(basis[i], v));
  }
  const auto coef = solve_square(gram, rhs);
  if (!coef) throw domain_error("lineality basis is degenerate");
  RatVector r(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    r[k] = Rational(v[k]);
    for (std::size_t i = 0; i < l; ++i) r[k] -= (*coef)[i] * Rational(basis[i][k]);
  }
  Integer den = 1;
  for (const auto& x : r) den = lcm(den, denominator(x));
  IntVector out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = numerator(r[k] * Rational(den));
  return is_zero(out) ? out : primitive(out);
}

// Lattice basis (columns, saturated, canonical) of { x : <a, x> = 0 for all a }.
inline std::vector<IntVector> orthogonal_lattice(const std::vector<IntVector>& rows, std::size_t n) {
  if (rows.empty()) return IntMatrix::identity(n).col_vectors();
  return integer_kernel(IntMatrix::from_rows(rows)).col_vectors();
}

inline bool satisfies(const std::vector<IntVector>& inequalities, const IntVector& x) {
  return std::all_of(inequalities.begin(), inequalities.end(), [&](const IntVector& a) { return dot(a, x) >= 0; });
}

}  // namespace detail

/// Generators of the dual cone { m : <m, v> >= 0 for every generator v }.
/// Extreme rays come first in graded-lex order, followed by a lattice basis
/// of the lineality space and its negation when the dual is not pointed.
inline RationalCone dual_cone(const RationalCone& sigma) {
  const std::size_t n = sigma.ambient_rank();
  const auto& constraints = sigma.generators();

  std::vector<IntVector> lines = IntMatrix::identity(n).col_vectors();
  std::vector<IntVector> rays;
  std::vector<std::vector<std::size_t>> tight;  // processed constraints each ray satisfies with equality
  std::vector<IntVector> processed;

  for (std::size_t ci = 0; ci < constraints.size(); ++ci) {
    const IntVector& a = constraints[ci];
    auto li = std::find_if(lines.begin(), lines.end(), [&](const IntVector& l) { return dot(a, l) != 0; });
    if (li != lines.end()) {
      // a line leaves the lineality space and becomes a ray; the rest is
      // pushed into the hyperplane a = 0
      IntVector l = *li;
      lines.erase(li);
      Integer al = dot(a, l);
      if (al < 0) {
        for (auto& x : l) x = -x;
        al = -al;
      }
      for (auto& other : lines) other = primitive(detail::combine(al, other, -dot(a, other), l));
      for (std::size_t r = 0; r < rays.size(); ++r) {
        rays[r] = primitive(detail::combine(al, rays[r], -dot(a, rays[r]), l));
        tight[r].push_back(ci);
      }
      std::vector<std::size_t> all(ci);
      for (std::size_t k = 0; k < ci; ++k) all[k] = k;
      rays.push_back(l);
      tight.push_back(std::move(all));
    } else {
      const std::size_t target = processed.empty() ? 0 : rank_of_vectors(processed, n);
      std::vector<IntVector> next;
      std::vector<std::vector<std::size_t>> next_tight;
      std::vector<std::size_t> pos;
      std::vector<std::size_t> neg;
      for (std::size_t r = 0; r < rays.size(); ++r) {
        const Integer s = dot(a, rays[r]);
        if (s > 0) {
          pos.push_back(r);
          next.push_back(rays[r]);
          next_tight.push_back(tight[r]);
        } else if (s == 0) {
          next.push_back(rays[r]);
          auto t = tight[r];
          t.push_back(ci);
          next_tight.push_back(std::move(t));
        } else {
          neg.push_back(r);
        }
      }
      for (auto p : pos)
        for (auto q : neg) {
          auto common = detail::intersect(tight[p], tight[q]);
          std::vector<IntVector> face_rows;
          for (auto k : common) face_rows.push_back(processed[k]);
          const std::size_t face_rank = face_rows.empty() ? 0 : rank_of_vectors(face_rows, n);
          if (target < 2 || face_rank != target - 2) continue;  // not adjacent
          next.push_back(primitive(detail::combine(dot(a, rays[p]), rays[q], -dot(a, rays[q]), rays[p])));
          common.push_back(ci);
          next_tight.push_back(std::move(common));
        }
      rays = std::move(next);
      tight = std::move(next_tight);
    }
    processed.push_back(a);
  }

  // canonical representatives: lineality is the lattice orthogonal to the
  // primal generators; rays are projected off it
  const std::vector<IntVector> lineality = detail::orthogonal_lattice(constraints, n);
  std::vector<IntVector> extreme;
  for (const auto& r : rays) {
    IntVector p = detail::project_off(r, lineality);
    if (!is_zero(p)) extreme.push_back(std::move(p));
  }
  sort_graded_lex(extreme);
  std::vector<IntVector> out = extreme;
  for (const auto& l : lineality) out.push_back(l);
  for (const auto& l : lineality) {
    IntVector m = l;
    for (auto& x : m) x = -x;
    out.push_back(std::move(m));
  }
  return RationalCone(n, out);
}

/// Lattice basis of the largest linear subspace contained in the cone.
inline std::vector<IntVector> lineality_basis(const RationalCone& cone) {
  return detail::orthogonal_lattice(dual_cone(cone).generators(), cone.ambient_rank());
}

inline bool is_pointed(const RationalCone& cone) { return lineality_basis(cone).empty(); }

struct HilbertBasis {
  RationalCone cone;
  std::vector<IntVector> generators;
  std::size_t rank_r() const noexcept { return generators.size(); }
};

namespace detail {

// Lattice points of the half-open parallelepiped spanned by linearly
// independent columns `gens` (n x k), via the Smith form of the generator
// matrix written in a basis of the saturated lattice span(gens) ∩ Z^n.
inline std::vector<IntVector> parallelepiped_points(const std::vector<IntVector>& gens, std::size_t n) {
  const std::size_t k = gens.size();
  // saturated basis W (n x k) of span(gens) ∩ Z^n
  const auto normals = orthogonal_lattice(gens, n);
  const IntMatrix w = IntMatrix::from_columns(orthogonal_lattice(normals, n), n);
  // choose k rows where W is invertible and solve W * S' = gens
  std::vector<std::size_t> rows;
  std::vector<IntVector> picked;
  for (std::size_t i = 0; i < n && rows.size() < k; ++i) {
    auto trial = picked;
    trial.push_back(w.row(i));
    if (rank_of_vectors(trial, k) == trial.size()) {
      picked = std::move(trial);
      rows.push_back(i);
    }
  }
  RatMatrix wk(k, RatVector(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) wk[i][j] = Rational(w(rows[i], j));
  IntMatrix s(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    RatVector b(k);
    for (std::size_t i = 0; i < k; ++i) b[i] = Rational(gens[j][rows[i]]);
    const auto x = solve_square(wk, b);
    for (std::size_t i = 0; i < k; ++i) s(i, j) = numerator((*x)[i]);
  }

  const SmithForm snf = smith_normal_form(s);
  const IntMatrix u_inv = unimodular_inverse(snf.U);
  const RatMatrix s_inv = *inverse(to_rational(s));
  const auto d = snf.diagonal();

  std::vector<IntVector> out;
  IntVector digit(k);
  for (;;) {
    // y = U^{-1} digit, reduced into the parallelepiped: y - S floor(S^{-1} y)
    IntVector y = u_inv * digit;
    IntVector fl(k);
    for (std::size_t i = 0; i < k; ++i) {
      Rational c = 0;
      for (std::size_t j = 0; j < k; ++j) c += s_inv[i][j] * Rational(y[j]);
      fl[i] = floor(c);
    }
    const IntVector shift = s * fl;
    for (std::size_t i = 0; i < k; ++i) y[i] -= shift[i];
    out.push_back(w * y);

    std::size_t pos = 0;
    while (pos < k) {
      ++digit[pos];
      if (digit[pos] < d[pos]) break;
      digit[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  return out;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline std::vector<IntVector> pointed_hilbert_basis(const RationalCone& cone) {
  const std::size_t n = cone.ambient_rank();
  const auto inequalities = dual_cone(cone).generators();
  const auto extreme = dual_cone(RationalCone(n, inequalities)).generators();
  if (extreme.empty()) return {};
  const std::size_t dim = rank_of_vectors(extreme, n);

  std::set<IntVector> candidates(extreme.begin(), extreme.end());
  for_each_subset(extreme.size(), dim, [&](const std::vector<std::size_t>& idx) {
    std::vector<IntVector> gens;
    for (auto i : idx) gens.push_back(extreme[i]);
    if (rank_of_vectors(gens, n) != dim) return;
    for (auto& p : parallelepiped_points(gens, n))
      if (!is_zero(p)) candidates.insert(std::move(p));
  });

  std::vector<IntVector> basis;
  for (const auto& x : candidates) {
    bool reducible = false;
    for (const auto& y : candidates) {
      if (y == x) continue;
      IntVector diff(n);
      for (std::size_t i = 0; i < n; ++i) diff[i] = x[i] - y[i];
      if (!is_zero(diff) && satisfies(inequalities, diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(x);
  }
  sort_graded_lex(basis);
  return basis;
}

}  // namespace detail

/// Minimal generating set of the semigroup cone ∩ Z^rank. A non-pointed cone
/// contributes a lattice basis of its lineality space in ± pairs; the
/// pointed quotient is lifted back with canonically reduced representatives.
inline HilbertBasis hilbert_basis(const RationalCone& cone) {
  const std::size_t n = cone.ambient_rank();
  const auto lineality = lineality_basis(cone);
  if (lineality.empty()) return HilbertBasis{cone, detail::pointed_hilbert_basis(cone)};

  const std::size_t l = lineality.size();
  std::vector<IntVector> out;
  if (l < n) {
    // Z^n -> Z^n / (L ∩ Z^n) via the Smith transform of the lineality basis
    const SmithForm snf = smith_normal_form(IntMatrix::from_columns(lineality));
    const IntMatrix u_inv = unimodular_inverse(snf.U);
    std::vector<IntVector> projected;
    for (const auto& g : cone.generators()) {
      IntVector y = snf.U * g;
      IntVector q(y.begin() + static_cast<std::ptrdiff_t>(l), y.end());
      if (!is_zero(q)) projected.push_back(std::move(q));
    }
    const auto quotient_basis = detail::pointed_hilbert_basis(RationalCone(n - l, projected));
    const IntMatrix hnf = IntMatrix::from_columns(lineality).transpose();  // rows in Hermite form
    for (const auto& h : quotient_basis) {
      IntVector full(n);
      for (std::size_t i = 0; i < n - l; ++i) full[l + i] = h[i];
      IntVector x = u_inv * full;
      for (std::size_t r = 0; r < hnf.rows(); ++r) {
        std::size_t c = 0;
        while (hnf(r, c) == 0) ++c;
        const Integer q = floor_div(x[c], hnf(r, c));
        for (std::size_t j = 0; j < n; ++j) x[j] -= q * hnf(r, j);
      }
      out.push_back(std::move(x));
    }
    sort_graded_lex(out);
  }
  for (const auto& b : lineality) out.push_back(b);
  for (const auto& b : lineality) {
    IntVector m = b;
    for (auto& x : m) x = -x;
    out.push_back(std::move(m));
  }
  return HilbertBasis{cone, std::move(out)};
}

/// The cone spanned by a fan cone's ray generators.
inline RationalCone fan_cone(const Fan& fan, RaySet cone) {
  if (!fan.is_cone(cone)) throw domain_error("ray set is not a cone of the fan");
  return RationalCone(fan.lattice_rank(), fan.generators(cone));
}

/// Number of Hilbert basis elements of the dual semigroup of a fan cone; the
/// profinite fiber over the affine chart minus its fixed point is Ẑ^r.
inline std::size_t affine_fiber_rank(const Fan& fan, RaySet cone) {
  return hilbert_basis(dual_cone(fan_cone(fan, cone))).rank_r();
}

}  // namespace protoric
