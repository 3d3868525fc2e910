#pragma once

// Deterministic JSON reports. Keys keep insertion order and every list is
// emitted in a canonical order, so identical input gives identical bytes.
// Ray indices are 1-based in every report.

#include "protoric/dual_semigroup.hpp"
#include "protoric/fan.hpp"
#include "protoric/moment.hpp"
#include "protoric/quotient.hpp"

#include <json.hpp>

#include <limits>
#include <optional>
#include <vector>

namespace protoric {

using Json = nlohmann::ordered_json;

inline Json to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

inline Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline Json to_json(const std::vector<IntVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

inline Json one_based(const std::vector<std::size_t>& idx) {
  Json a = Json::array();
  for (auto i : idx) a.push_back(i + 1);
  return a;
}

inline Json one_based(RaySet s) { return one_based(ray_indices(s)); }

inline Json charge_matrix_json(const IntMatrix& q) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < q.rows(); ++i) rows.push_back(to_json(q.row(i)));
  return rows;
}

inline Json symmetry_json(const FanSymmetryGroup& g) {
  Json j;
  j["order"] = to_json(g.order);
  j["structure"] = g.structure;
  j["classes"] = Json::array();
  for (const auto& c : g.row_classes) j["classes"].push_back(one_based(c));
  j["generators"] = Json::array();
  for (const auto& p : g.generators) j["generators"].push_back(one_based(p));
  j["warnings"] = g.warnings;
  return j;
}

inline Json aut_json(const AutPresentation& a) {
  Json j;
  j["finite_part"] = a.finite_part.structure;
  j["torus_rank"] = a.solenoidal_torus_rank;
  j["presentation"] = a.presentation;
  j["notes"] = a.notes;
  return j;
}

/// Face lattice report: { "f_vector", "cusps", "faces": [{"cone", "dim", "fiber_rank"}] }.
inline Json delzant_report(const Fan& fan) {
  const FaceLattice fl = face_lattice(fan);
  Json j;
  j["f_vector"] = fl.f_vector;
  j["cusps"] = cusp_count(fan);
  j["faces"] = Json::array();
  for (const auto& node : fl.nodes) {
    Json f;
    f["cone"] = one_based(node.cone.ray_indices);
    f["dim"] = node.face_dim;
    f["fiber_rank"] = node.fiber_rank;
    j["faces"].push_back(f);
  }
  return j;
}

inline Json hilbert_report(const Fan& fan, RaySet cone) {
  const RationalCone sigma = fan_cone(fan, cone);
  const RationalCone dual = dual_cone(sigma);
  const HilbertBasis hb = hilbert_basis(dual);
  Json j;
  j["cone"] = one_based(cone);
  j["cone_generators"] = to_json(sigma.generators());
  j["dual_generators"] = to_json(dual.generators());
  j["hilbert_basis"] = to_json(hb.generators);
  j["r"] = hb.rank_r();
  return j;
}

/// Full analysis of a fan: quotient data, symmetry, automorphisms, fiber
/// ranks of every cone and, for complete fans, the face lattice summary.
inline Json analysis_report(const Fan& fan) {
  const ChargeMatrix q = charge_matrix(fan);
  const QuotientGroupStructure gs = group_structure(fan);
  const DiscriminantAntichain z = discriminant_locus(fan);

  Json j;
  j["name"] = fan.name();
  j["lattice_rank"] = fan.lattice_rank();
  j["n_rays"] = fan.ray_count();
  j["complete"] = fan.complete();
  j["charge_matrix"] = charge_matrix_json(q.q);
  j["torus_rank"] = gs.torus_rank;
  j["torsion"] = Json::array();
  for (const auto& d : gs.torsion_factors) j["torsion"].push_back(to_json(d));
  j["discriminant"] = Json::array();
  for (RaySet s : z.minimal_subsets) j["discriminant"].push_back(one_based(s));
  j["symmetry"] = symmetry_json(fan_symmetry(fan));
  j["aut"] = fan.complete() ? aut_json(aut_presentation(fan)) : Json(nullptr);
  j["fiber_ranks"] = Json::array();
  for (RaySet s : fan.cones()) {
    Json entry;
    entry["cone"] = one_based(s);
    entry["r"] = affine_fiber_rank(fan, s);
    j["fiber_ranks"].push_back(entry);
  }
  if (fan.complete()) {
    const FaceLattice fl = face_lattice(fan);
    Json summary;
    summary["f_vector"] = fl.f_vector;
    summary["cusps"] = cusp_count(fan);
    j["face_lattice"] = summary;
  } else {
    j["face_lattice"] = nullptr;
  }
  return j;
}

}  // namespace protoric
