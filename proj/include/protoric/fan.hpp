#pragma once

// Simplicial fans: primitive rays plus maximal cones given as ray-index sets.
// Cones are identified with their ray-index sets and faces with subsets.

#include "protoric/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace protoric {

/// Ray-index set as a bitmask; bit i is ray i (0-based).
using RaySet = std::uint64_t;

inline constexpr std::size_t kMaxRays = 64;

inline RaySet ray_set(const std::vector<std::size_t>& indices) {
  RaySet s = 0;
  for (auto i : indices) s |= RaySet{1} << i;
  return s;
}

inline std::vector<std::size_t> ray_indices(RaySet s) {
  std::vector<std::size_t> out;
  while (s != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

inline std::size_t cardinality(RaySet s) { return static_cast<std::size_t>(std::popcount(s)); }

inline bool is_subset(RaySet a, RaySet b) { return (a & ~b) == 0; }

/// A cone of a fan, by its sorted ray indices (0-based).
struct ConeRef {
  std::vector<std::size_t> ray_indices;

  RaySet mask() const { return ray_set(ray_indices); }
  std::size_t size() const { return ray_indices.size(); }
  friend auto operator<=>(const ConeRef&, const ConeRef&) = default;
};

/// Orders ray sets by cardinality, then by their sorted index lists.
inline bool canonical_less(RaySet a, RaySet b) {
  if (cardinality(a) != cardinality(b)) return cardinality(a) < cardinality(b);
  return ray_indices(a) < ray_indices(b);
}

class Fan {
 public:
  /// Validates and builds a fan. Ray indices in `maximal_cones` are 0-based.
  static Fan build(std::size_t lattice_rank, std::vector<IntVector> rays,
                   std::vector<std::vector<std::size_t>> maximal_cones, bool complete,
                   std::string name = {}) {
    if (lattice_rank == 0) throw input_error("lattice_rank must be positive");
    if (rays.empty()) throw input_error("rays: empty ray list");
    if (rays.size() > kMaxRays) throw input_error("rays: more than 64 rays are not supported");
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (rays[i].size() != lattice_rank)
        throw input_error("rays[" + std::to_string(i + 1) + "]: length differs from lattice_rank");
      if (is_zero(rays[i])) throw input_error("rays[" + std::to_string(i + 1) + "]: zero vector");
      if (!is_primitive(rays[i])) throw input_error("rays[" + std::to_string(i + 1) + "]: ray is not primitive");
      for (std::size_t j = 0; j < i; ++j)
        if (rays[i] == rays[j])
          throw input_error("rays[" + std::to_string(i + 1) + "]: duplicate of ray " + std::to_string(j + 1));
    }
    if (maximal_cones.empty()) throw input_error("maximal_cones: no cones given");

    Fan f;
    f.rank_ = lattice_rank;
    f.rays_ = std::move(rays);
    f.complete_ = complete;
    f.name_ = std::move(name);

    RaySet used = 0;
    for (std::size_t c = 0; c < maximal_cones.size(); ++c) {
      auto& cone = maximal_cones[c];
      const std::string where = "maximal_cones[" + std::to_string(c + 1) + "]";
      if (cone.empty()) throw input_error(where + ": empty cone");
      for (auto i : cone)
        if (i >= f.rays_.size()) throw input_error(where + ": ray index " + std::to_string(i + 1) + " out of range");
      std::sort(cone.begin(), cone.end());
      if (std::adjacent_find(cone.begin(), cone.end()) != cone.end())
        throw input_error(where + ": repeated ray index");
      std::vector<IntVector> gens;
      for (auto i : cone) gens.push_back(f.rays_[i]);
      if (rank_of_vectors(gens, lattice_rank) != cone.size())
        throw input_error(where + ": generators are linearly dependent (non-simplicial cones are not supported)");
      const RaySet s = ray_set(cone);
      used |= s;
      f.maximal_.push_back(s);
    }
    for (std::size_t i = 0; i < f.maximal_.size(); ++i)
      for (std::size_t j = 0; j < f.maximal_.size(); ++j)
        if (i != j && is_subset(f.maximal_[i], f.maximal_[j]))
          throw input_error("maximal_cones[" + std::to_string(i + 1) + "]: contained in maximal cone " +
                            std::to_string(j + 1));
    for (std::size_t i = 0; i < f.rays_.size(); ++i)
      if (!(used >> i & 1U)) throw input_error("rays[" + std::to_string(i + 1) + "]: ray unused by any cone");

    if (complete) f.check_completeness_conditions();

    std::set<RaySet> family;
    for (RaySet m : f.maximal_) {
      // every subset of a simplicial cone is a face
      RaySet sub = m;
      for (;;) {
        family.insert(sub);
        if (sub == 0) break;
        sub = (sub - 1) & m;
      }
    }
    f.cones_.assign(family.begin(), family.end());
    std::sort(f.cones_.begin(), f.cones_.end(), canonical_less);
    return f;
  }

  std::size_t lattice_rank() const noexcept { return rank_; }
  std::size_t ray_count() const noexcept { return rays_.size(); }
  const std::vector<IntVector>& rays() const noexcept { return rays_; }
  const IntVector& ray(std::size_t i) const { return rays_.at(i); }
  bool complete() const noexcept { return complete_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<RaySet>& maximal_cones() const noexcept { return maximal_; }
  RaySet all_rays() const noexcept {
    return rays_.size() == 64 ? ~RaySet{0} : (RaySet{1} << rays_.size()) - 1;
  }

  /// All cones (the face closure), ordered by dimension then index list.
  const std::vector<RaySet>& cones() const noexcept { return cones_; }

  /// Rows are the ray generators.
  IntMatrix ray_matrix() const { return IntMatrix::from_rows(rays_); }

  std::vector<IntVector> generators(RaySet s) const {
    std::vector<IntVector> g;
    for (auto i : protoric::ray_indices(s)) g.push_back(rays_[i]);
    return g;
  }

  bool is_cone(RaySet s) const {
    if (!is_subset(s, all_rays())) throw domain_error("ray index out of range");
    return std::any_of(maximal_.begin(), maximal_.end(), [s](RaySet m) { return is_subset(s, m); });
  }

  bool is_cone(const std::vector<std::size_t>& indices) const {
    for (auto i : indices)
      if (i >= rays_.size()) throw domain_error("ray index " + std::to_string(i + 1) + " out of range");
    return is_cone(ray_set(indices));
  }

  /// Rank of the generator set, which is |s| on this simplicial scope.
  std::size_t cone_dimension(RaySet s) const { return rank_of_vectors(generators(s), rank_); }

  bool rays_span() const { return rank(ray_matrix()) == rank_; }

 private:
  // Necessary conditions for a complete simplicial fan: maximal cones are
  // full dimensional and every codimension-one face lies in exactly two.
  void check_completeness_conditions() const {
    std::map<RaySet, int> walls;
    for (std::size_t c = 0; c < maximal_.size(); ++c) {
      if (cardinality(maximal_[c]) != rank_)
        throw input_error("complete: maximal_cones[" + std::to_string(c + 1) +
                          "] is not full dimensional, so the fan cannot be complete");
      for (auto i : protoric::ray_indices(maximal_[c])) ++walls[maximal_[c] & ~(RaySet{1} << i)];
    }
    for (const auto& [wall, count] : walls)
      if (count != 2)
        throw input_error("complete: a codimension-one cone lies in " + std::to_string(count) +
                          " maximal cones (expected 2)");
  }

  std::size_t rank_ = 0;
  std::vector<IntVector> rays_;
  std::vector<RaySet> maximal_;
  std::vector<RaySet> cones_;
  bool complete_ = false;
  std::string name_;
};

struct ConePoset {
  std::vector<ConeRef> cones;        // ordered by dimension, then index list
  std::vector<std::size_t> dims;     // rank of each cone's generators
  std::vector<RaySet> masks;

  /// cones[a] is a face of cones[b].
  bool leq(std::size_t a, std::size_t b) const { return is_subset(masks[a], masks[b]); }
  std::size_t size() const { return cones.size(); }
};

inline ConePoset cone_poset(const Fan& fan) {
  ConePoset p;
  for (RaySet s : fan.cones()) {
    p.cones.push_back(ConeRef{ray_indices(s)});
    p.dims.push_back(fan.cone_dimension(s));
    p.masks.push_back(s);
  }
  return p;
}

}  // namespace protoric
