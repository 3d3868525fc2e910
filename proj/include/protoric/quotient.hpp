#pragma once

// Homogeneous-coordinate quotient data of a fan: charge matrix Q, the group
// G = ker ξ, the discriminant locus Z(F), the fan symmetry S^F and the
// automorphism presentation S^F ⋉ (C*_Q)^n / G_Q of the completion.

#include "protoric/fan.hpp"
#include "protoric/lattice.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace protoric {

/// Columns span the relations Σ_i Q_ij v_i = 0, canonical column Hermite form.
struct ChargeMatrix {
  IntMatrix q;  // n_rays x s
  std::size_t relations() const noexcept { return q.cols(); }
};

struct QuotientGroupStructure {
  std::size_t torus_rank = 0;            // s
  std::vector<Integer> torsion_factors;  // invariant factors > 1, divisibility chain
  bool torsion_free() const noexcept { return torsion_factors.empty(); }
};

/// Minimal ray subsets that generate no cone. Z(F) is the union of the
/// coordinate subspaces where those coordinates vanish.
struct DiscriminantAntichain {
  std::vector<RaySet> minimal_subsets;  // canonical order

  bool contains_member(RaySet s) const {
    return std::any_of(minimal_subsets.begin(), minimal_subsets.end(), [s](RaySet m) { return is_subset(m, s); });
  }
};

/// A permutation of ray indices in 0-based one-line notation: i -> image[i].
using Permutation = std::vector<std::size_t>;

struct FanSymmetryGroup {
  std::vector<std::vector<std::size_t>> row_classes;  // rays with equal Q rows
  std::vector<Permutation> generators;
  Integer order = 1;
  std::string structure;
  std::vector<std::string> warnings;
};

struct AutPresentation {
  FanSymmetryGroup finite_part;
  std::size_t solenoidal_torus_rank = 0;
  std::string presentation;
  std::vector<std::string> notes;
};

inline void require_spanning(const Fan& fan) {
  if (!fan.rays_span())
    throw domain_error("fan has a torus factor (rays do not span the lattice); the charge-matrix quotient "
                       "presentation does not apply");
}

inline ChargeMatrix charge_matrix(const Fan& fan) {
  require_spanning(fan);
  return ChargeMatrix{integer_kernel(fan.ray_matrix().transpose())};
}

inline QuotientGroupStructure group_structure(const Fan& fan) {
  require_spanning(fan);
  QuotientGroupStructure g;
  g.torus_rank = fan.ray_count() - fan.lattice_rank();
  // coker(M -> Z^{F(1)}) ≅ Z^s ⊕ torsion, and G = Hom(coker, C*)
  for (const auto& d : smith_normal_form(fan.ray_matrix()).diagonal())
    if (d > 1) g.torsion_factors.push_back(d);
  return g;
}

/// Ascending-cardinality scan; a minimal non-face has at most rank + 1 rays
/// because all of its maximal proper subsets are simplicial cones.
inline DiscriminantAntichain discriminant_locus(const Fan& fan) {
  DiscriminantAntichain z;
  const std::size_t n = fan.ray_count();
  const std::size_t max_size = std::min(n, fan.lattice_rank() + 1);
  for (std::size_t k = 1; k <= max_size; ++k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (;;) {
      const RaySet s = ray_set(idx);
      if (!z.contains_member(s) && !fan.is_cone(s)) z.minimal_subsets.push_back(s);
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  std::sort(z.minimal_subsets.begin(), z.minimal_subsets.end(), canonical_less);
  return z;
}

inline RaySet apply(const Permutation& p, RaySet s) {
  RaySet out = 0;
  for (auto i : ray_indices(s)) out |= RaySet{1} << p[i];
  return out;
}

inline bool preserves(const Permutation& p, const std::vector<RaySet>& family) {
  const std::set<RaySet> set(family.begin(), family.end());
  return std::all_of(family.begin(), family.end(), [&](RaySet s) { return set.count(apply(p, s)) != 0; });
}

inline Permutation compose(const Permutation& a, const Permutation& b) {  // a after b
  Permutation c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

namespace detail {

inline std::set<Permutation> closure(const std::vector<Permutation>& gens, std::size_t n) {
  Permutation id(n);
  std::iota(id.begin(), id.end(), std::size_t{0});
  std::set<Permutation> group{id};
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        Permutation q = compose(g, p);
        if (group.insert(q).second) next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  return group;
}

inline Integer factorial(std::size_t k) {
  Integer f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

inline std::string product_name(const std::vector<std::vector<std::size_t>>& classes) {
  std::string name;
  for (const auto& c : classes) {
    if (c.size() < 2) continue;
    if (!name.empty()) name += " x ";
    name += c.size() == 2 ? "Z_2" : "S_" + std::to_string(c.size());
  }
  return name.empty() ? "1" : name;
}

inline constexpr std::size_t kEnumerationLimit = 1'000'000;

}  // namespace detail

/// Ray permutations fixing every row of Q and mapping the discriminant
/// antichain to itself. Rows that are equal in one basis of the column
/// lattice are equal in every basis, so only the lattice matters.
inline FanSymmetryGroup symmetry_group(const IntMatrix& charge, const DiscriminantAntichain& z) {
  const std::size_t n = charge.rows();
  FanSymmetryGroup g;
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t j = i; j < n; ++j)
      if (!seen[j] && charge.row(j) == charge.row(i)) {
        cls.push_back(j);
        seen[j] = true;
      }
    g.row_classes.push_back(std::move(cls));
  }

  Permutation id(n);
  std::iota(id.begin(), id.end(), std::size_t{0});
  auto transposition = [&](std::size_t a, std::size_t b) {
    Permutation p = id;
    std::swap(p[a], p[b]);
    return p;
  };

  Integer full_order = 1;
  bool all_admissible = true;
  for (const auto& c : g.row_classes) {
    full_order *= detail::factorial(c.size());
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = a + 1; b < c.size(); ++b)
        if (!preserves(transposition(c[a], c[b]), z.minimal_subsets)) all_admissible = false;
  }

  if (all_admissible) {
    // transpositions generate each symmetric factor, so the whole product
    // preserves the antichain; report the standard two generators per factor
    for (const auto& c : g.row_classes) {
      if (c.size() < 2) continue;
      g.generators.push_back(transposition(c[0], c[1]));
      if (c.size() > 2) {
        Permutation cycle = id;
        for (std::size_t k = 0; k < c.size(); ++k) cycle[c[k]] = c[(k + 1) % c.size()];
        g.generators.push_back(std::move(cycle));
      }
    }
    g.order = full_order;
    g.structure = detail::product_name(g.row_classes);
    return g;
  }

  if (full_order > detail::kEnumerationLimit)
    throw domain_error("fan symmetry candidate group too large to filter by enumeration");

  // enumerate the product of symmetric groups on the classes and keep the
  // permutations preserving the antichain
  std::vector<Permutation> admissible;
  std::function<void(std::size_t, Permutation&)> walk = [&](std::size_t k, Permutation& p) {
    if (k == g.row_classes.size()) {
      if (preserves(p, z.minimal_subsets)) admissible.push_back(p);
      return;
    }
    const auto& cls = g.row_classes[k];
    auto img = cls;
    do {
      for (std::size_t t = 0; t < cls.size(); ++t) p[cls[t]] = img[t];
      walk(k + 1, p);
    } while (std::next_permutation(img.begin(), img.end()));
  };
  Permutation p = id;
  walk(0, p);
  std::sort(admissible.begin(), admissible.end());

  std::set<Permutation> generated{id};
  for (const auto& a : admissible) {
    if (generated.count(a) != 0) continue;
    g.generators.push_back(a);
    generated = detail::closure(g.generators, n);
  }
  g.order = admissible.size();
  g.structure = "order " + g.order.str() + " subgroup of " + detail::product_name(g.row_classes);
  return g;
}

inline FanSymmetryGroup fan_symmetry(const Fan& fan) {
  const auto q = charge_matrix(fan);
  FanSymmetryGroup g = symmetry_group(q.q, discriminant_locus(fan));
  if (!group_structure(fan).torsion_free())
    g.warnings.push_back("G has torsion; the charge matrix only sees its identity component");
  for (std::size_t k = 0; k < g.generators.size(); ++k)
    if (!preserves(g.generators[k], fan.maximal_cones()))
      g.warnings.push_back("generator " + std::to_string(k + 1) + " does not map maximal cones to maximal cones");
  return g;
}

inline AutPresentation aut_presentation(const Fan& fan) {
  if (!fan.complete())
    throw domain_error("automorphism presentation requires a complete fan (fan is not declared complete)");
  AutPresentation a;
  a.finite_part = fan_symmetry(fan);
  const auto gs = group_structure(fan);
  a.solenoidal_torus_rank = fan.ray_count() - gs.torus_rank;
  const std::string torus = "(C*_Q)^" + std::to_string(a.solenoidal_torus_rank);
  std::string finite = a.finite_part.structure;
  if (finite.find(' ') != std::string::npos) finite = "(" + finite + ")";
  a.presentation = a.finite_part.order == 1 ? torus : finite + " ⋉ " + torus;
  if (!gs.torsion_free()) {
    std::string f;
    for (const auto& d : gs.torsion_factors) f += (f.empty() ? "" : ", ") + d.str();
    a.notes.push_back("G has torsion factors [" + f + "]");
  }
  return a;
}

}  // namespace protoric
