#pragma once

// JSON fan files:
//   { "lattice_rank": n, "rays": [[...], ...], "maximal_cones": [[1-based ray indices], ...],
//     "complete": true|false, "name": "optional" }

#include "protoric/fan.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace protoric {

namespace detail {

inline const nlohmann::json& require_field(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw input_error(std::string("missing field '") + key + "'");
  return doc.at(key);
}

inline Integer json_integer(const nlohmann::json& v, const std::string& where) {
  if (v.is_number_integer()) return v.is_number_unsigned() ? Integer(v.get<std::uint64_t>()) : Integer(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return Integer(v.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw input_error(where + ": expected an integer");
}

}  // namespace detail

inline Fan fan_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw input_error("fan file: top level must be a JSON object");

  const auto& rank_field = detail::require_field(doc, "lattice_rank");
  if (!rank_field.is_number_integer() || rank_field.get<std::int64_t>() <= 0)
    throw input_error("lattice_rank: expected a positive integer");
  const auto rank = static_cast<std::size_t>(rank_field.get<std::int64_t>());

  const auto& rays_field = detail::require_field(doc, "rays");
  if (!rays_field.is_array()) throw input_error("rays: expected an array of integer arrays");
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < rays_field.size(); ++i) {
    const std::string where = "rays[" + std::to_string(i + 1) + "]";
    if (!rays_field[i].is_array()) throw input_error(where + ": expected an array of integers");
    IntVector v;
    for (const auto& x : rays_field[i]) v.push_back(detail::json_integer(x, where));
    rays.push_back(std::move(v));
  }

  const auto& cones_field = detail::require_field(doc, "maximal_cones");
  if (!cones_field.is_array()) throw input_error("maximal_cones: expected an array of index arrays");
  std::vector<std::vector<std::size_t>> cones;
  for (std::size_t c = 0; c < cones_field.size(); ++c) {
    const std::string where = "maximal_cones[" + std::to_string(c + 1) + "]";
    if (!cones_field[c].is_array()) throw input_error(where + ": expected an array of ray indices");
    std::vector<std::size_t> cone;
    for (const auto& x : cones_field[c]) {
      if (!x.is_number_integer() || x.get<std::int64_t>() < 1 ||
          static_cast<std::size_t>(x.get<std::int64_t>()) > rays.size())
        throw input_error(where + ": ray index must be an integer in 1.." + std::to_string(rays.size()));
      cone.push_back(static_cast<std::size_t>(x.get<std::int64_t>() - 1));
    }
    cones.push_back(std::move(cone));
  }

  const auto& complete_field = detail::require_field(doc, "complete");
  if (!complete_field.is_boolean()) throw input_error("complete: expected true or false");

  std::string name;
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) throw input_error("name: expected a string");
    name = doc.at("name").get<std::string>();
  }
  return Fan::build(rank, std::move(rays), std::move(cones), complete_field.get<bool>(), std::move(name));
}

inline Fan parse_fan(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(std::string("fan file is not valid JSON: ") + e.what());
  }
  return fan_from_json(doc);
}

inline Fan read_fan_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open fan file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_fan(ss.str());
}

inline nlohmann::ordered_json fan_to_json(const Fan& fan) {
  nlohmann::ordered_json doc;
  doc["lattice_rank"] = fan.lattice_rank();
  doc["rays"] = nlohmann::ordered_json::array();
  for (const auto& r : fan.rays()) {
    auto row = nlohmann::ordered_json::array();
    for (const auto& x : r) row.push_back(x.convert_to<std::int64_t>());
    doc["rays"].push_back(row);
  }
  doc["maximal_cones"] = nlohmann::ordered_json::array();
  for (RaySet m : fan.maximal_cones()) {
    auto cone = nlohmann::ordered_json::array();
    for (auto i : ray_indices(m)) cone.push_back(i + 1);
    doc["maximal_cones"].push_back(cone);
  }
  doc["complete"] = fan.complete();
  if (!fan.name().empty()) doc["name"] = fan.name();
  return doc;
}

}  // namespace protoric
