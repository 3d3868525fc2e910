#pragma once

// Standard fans used across suites. Cone indices are 0-based here.

#include "protoric/fan.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace fixtures {

using protoric::Fan;
using protoric::IntVector;

inline IntVector v(std::initializer_list<long> xs) {
  IntVector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

inline Fan cp1() { return Fan::build(1, {v({1}), v({-1})}, {{0}, {1}}, true, "CP1"); }

inline Fan cp2() {
  return Fan::build(2, {v({1, 0}), v({0, 1}), v({-1, -1})}, {{0, 1}, {1, 2}, {0, 2}}, true, "CP2");
}

inline Fan cp1xcp1() {
  return Fan::build(2, {v({1, 0}), v({-1, 0}), v({0, 1}), v({0, -1})}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}, true,
                    "CP1xCP1");
}

// labelled so that v1 + v2 + n v3 = 0
inline Fan cp11n(long n) {
  return Fan::build(2, {v({1, 0}), v({-1, -n}), v({0, 1})}, {{0, 1}, {1, 2}, {0, 2}}, true,
                    "CP(1,1," + std::to_string(n) + ")");
}

// v3 + v4 = 0 and v1 + v2 - n v4 = 0
inline Fan hirzebruch(long n) {
  return Fan::build(2, {v({1, 0}), v({-1, n}), v({0, -1}), v({0, 1})}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}, true,
                    "F_" + std::to_string(n));
}

// e_1, ..., e_m, -(e_1 + ... + e_m); maximal cones omit one ray each
inline Fan cpm(std::size_t m) {
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < m; ++i) {
    IntVector e(m);
    e[i] = 1;
    rays.push_back(e);
  }
  rays.push_back(IntVector(m, -1));
  std::vector<std::vector<std::size_t>> cones;
  for (std::size_t skip = 0; skip <= m; ++skip) {
    std::vector<std::size_t> c;
    for (std::size_t i = 0; i <= m; ++i)
      if (i != skip) c.push_back(i);
    cones.push_back(c);
  }
  return Fan::build(m, rays, cones, true, "CP" + std::to_string(m));
}

}  // namespace fixtures
