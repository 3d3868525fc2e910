#pragma once

// Face lattice of the Delzant polytope of a complete simplicial fan, by
// inverting the cone poset. A face of dimension m sits over cones of
// dimension n - m and carries an m-dimensional solenoidal torus as fiber;
// vertices are the cusps.

#include "protoric/fan.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace protoric {

struct FaceNode {
  ConeRef cone;
  std::size_t face_dim = 0;
  std::size_t fiber_rank = 0;
  bool is_cusp = false;
};

struct FaceLattice {
  std::vector<FaceNode> nodes;
  std::vector<RaySet> masks;
  std::vector<std::size_t> f_vector;  // f_vector[m] = number of m-faces

  /// Face a contains face b, i.e. cone(a) ⊆ cone(b).
  bool contains(std::size_t a, std::size_t b) const { return is_subset(masks[a], masks[b]); }
  std::size_t size() const { return nodes.size(); }
};

inline void require_complete(const Fan& fan) {
  if (!fan.complete())
    throw domain_error("Delzant polytope needs a complete (projective) fan; this fan is not declared complete");
}

inline FaceLattice face_lattice(const Fan& fan) {
  require_complete(fan);
  const std::size_t n = fan.lattice_rank();
  FaceLattice fl;
  fl.f_vector.assign(n + 1, 0);
  for (RaySet s : fan.cones()) {
    const std::size_t dim = fan.cone_dimension(s);
    FaceNode node{ConeRef{ray_indices(s)}, n - dim, n - dim, dim == n};
    ++fl.f_vector[node.face_dim];
    fl.nodes.push_back(std::move(node));
    fl.masks.push_back(s);
  }
  return fl;
}

inline std::size_t cusp_count(const Fan& fan) {
  require_complete(fan);
  std::size_t k = 0;
  for (RaySet m : fan.maximal_cones())
    if (fan.cone_dimension(m) == fan.lattice_rank()) ++k;
  return k;
}

/// SVG drawing of a rank-2 Delzant polygon from combinatorics alone. Each
/// ray goes to its direction on the unit circle; the vertex of a maximal
/// cone sits on the unit circle at the mean angle of its two rays.
inline std::string delzant_svg(const Fan& fan) {
  require_complete(fan);
  if (fan.lattice_rank() != 2) throw domain_error("SVG rendering is only available for rank-2 fans");
  auto angle = [&](std::size_t i) {
    const double x = fan.ray(i)[0].convert_to<double>();
    const double y = fan.ray(i)[1].convert_to<double>();
    return std::atan2(y, x);
  };
  struct Vertex {
    double theta;
    RaySet cone;
  };
  std::vector<Vertex> vertices;
  for (RaySet m : fan.maximal_cones()) {
    const auto idx = ray_indices(m);
    double a = angle(idx[0]);
    double b = angle(idx[1]);
    if (std::abs(a - b) > std::numbers::pi) (a < b ? a : b) += 2 * std::numbers::pi;
    vertices.push_back({(a + b) / 2, m});
  }
  std::sort(vertices.begin(), vertices.end(), [](const Vertex& u, const Vertex& v) { return u.theta < v.theta; });

  constexpr double kCenter = 150.0;
  constexpr double kRadius = 100.0;
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"300\" height=\"300\" viewBox=\"0 0 300 300\">\n";
  os << "  <polygon fill=\"#e8eef8\" stroke=\"#223\" stroke-width=\"2\" points=\"";
  for (std::size_t k = 0; k < vertices.size(); ++k)
    os << (k ? " " : "") << kCenter + kRadius * std::cos(vertices[k].theta) << ","
       << kCenter - kRadius * std::sin(vertices[k].theta);
  os << "\"/>\n";
  for (const auto& v : vertices) {
    const double x = kCenter + kRadius * std::cos(v.theta);
    const double y = kCenter - kRadius * std::sin(v.theta);
    std::string label;
    for (auto i : ray_indices(v.cone)) label += (label.empty() ? "" : ",") + std::to_string(i + 1);
    os << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"5\" fill=\"#c22\"><title>cusp {" << label
       << "}</title></circle>\n";
  }
  os << "  <text x=\"" << kCenter << "\" y=\"" << kCenter << "\" text-anchor=\"middle\" font-size=\"12\">"
     << "(C*_Q)^2</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace protoric
