#include "fixtures.hpp"
#include "oracles.hpp"
#include "protoric/dual_semigroup.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace protoric;
using fixtures::v;

namespace {

std::vector<IntVector> vs(std::initializer_list<IntVector> xs) { return xs; }

// dual(σ) is exactly { m : <m, g> >= 0 } on the box, checked point by point
void expect_dual_on_box(const RationalCone& sigma, const RationalCone& dual, int bound) {
  for (const auto& d : dual.generators())
    for (const auto& g : sigma.generators()) EXPECT_GE(dot(d, g), 0);
  oracle::for_each_box_point(sigma.ambient_rank(), bound, [&](const IntVector& m) {
    bool inside = true;
    for (const auto& g : sigma.generators()) inside = inside && dot(m, g) >= 0;
    EXPECT_EQ(inside, oracle::in_cone(dual.generators(), m));
  });
}

}  // namespace

TEST(DualCone, OrthantIsSelfDual) {
  const auto d = dual_cone(RationalCone(2, vs({v({1, 0}), v({0, 1})})));
  EXPECT_EQ(d.generators(), vs({v({1, 0}), v({0, 1})}));
}

TEST(DualCone, HalfPlane) {
  const RationalCone sigma(2, vs({v({1, 0})}));
  const auto d = dual_cone(sigma);
  EXPECT_EQ(d.generators(), vs({v({1, 0}), v({0, 1}), v({0, -1})}));
  expect_dual_on_box(sigma, d, 5);
}

TEST(DualCone, SkewCone) {
  const RationalCone sigma(2, vs({v({0, 1}), v({2, -1})}));
  const auto d = dual_cone(sigma);
  EXPECT_EQ(d.generators(), vs({v({1, 0}), v({1, 2})}));
  expect_dual_on_box(sigma, d, 5);
}

TEST(DualCone, ZeroConeDualIsEverything) {
  const auto d = dual_cone(RationalCone(3, {}));
  EXPECT_EQ(lineality_basis(d).size(), 3U);
}

TEST(DualCone, RandomAgainstBox) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 3;
    std::vector<IntVector> gens;
    for (int k = 0; k < 1 + trial % 4; ++k) {
      IntVector g(n);
      for (auto& x : g) x = entry(rng);
      if (!is_zero(g)) gens.push_back(g);
    }
    const RationalCone sigma(n, gens);
    expect_dual_on_box(sigma, dual_cone(sigma), 3);
  }
}

TEST(Hilbert, Orthant) {
  const auto h = hilbert_basis(RationalCone(2, vs({v({1, 0}), v({0, 1})})));
  EXPECT_EQ(h.generators, vs({v({1, 0}), v({0, 1})}));
  EXPECT_EQ(h.rank_r(), 2U);
}

TEST(Hilbert, SkewDual) {
  const auto h = hilbert_basis(RationalCone(2, vs({v({1, 0}), v({1, 2})})));
  EXPECT_EQ(h.generators, vs({v({1, 0}), v({1, 1}), v({1, 2})}));
  EXPECT_EQ(h.rank_r(), 3U);
}

TEST(Hilbert, HalfPlane) {
  const auto h = hilbert_basis(RationalCone(2, vs({v({1, 0}), v({0, 1}), v({0, -1})})));
  EXPECT_EQ(h.rank_r(), 3U);
  std::set<IntVector> got(h.generators.begin(), h.generators.end());
  EXPECT_EQ(got, (std::set<IntVector>{v({1, 0}), v({0, 1}), v({0, -1})}));
}

TEST(Hilbert, WholeSpace) {
  const auto h = hilbert_basis(RationalCone(2, vs({v({1, 0}), v({-1, 0}), v({0, 1}), v({0, -1})})));
  EXPECT_EQ(h.rank_r(), 4U);
}

TEST(Hilbert, ClassicalSingularity) {
  // cone((1,0),(1,3)) has Hilbert basis (1,0),(1,1),(1,2),(1,3)
  const auto h = hilbert_basis(RationalCone(2, vs({v({1, 0}), v({1, 3})})));
  EXPECT_EQ(h.rank_r(), 4U);
}

TEST(Hilbert, GradedLexOrder) {
  std::vector<IntVector> xs = {v({0, 1}), v({1, 0}), v({-1, 0}), v({1, 1}), v({1, 0})};
  sort_graded_lex(xs);
  EXPECT_EQ(xs, vs({v({1, 0}), v({0, 1}), v({-1, 0}), v({1, 1})}));
}

TEST(FiberRank, Examples) {
  const Fan cp2 = fixtures::cp2();
  EXPECT_EQ(affine_fiber_rank(cp2, ray_set({0, 1})), 2U);
  EXPECT_EQ(affine_fiber_rank(cp2, 0), 4U);
  EXPECT_EQ(affine_fiber_rank(fixtures::cpm(3), 0), 6U);
  const Fan skew = Fan::build(2, {v({0, 1}), v({2, -1})}, {{0, 1}}, false);
  EXPECT_EQ(affine_fiber_rank(skew, ray_set({0, 1})), 3U);
  EXPECT_THROW(affine_fiber_rank(fixtures::cp1xcp1(), ray_set({0, 1})), domain_error);
}

TEST(Hilbert, RandomPointedAgainstOracle) {
  std::mt19937_64 rng(4711);
  std::uniform_int_distribution<int> entry(-3, 3);
  int checked = 0;
  while (checked < 25) {
    const std::size_t n = 2 + checked % 2;
    std::vector<IntVector> gens;
    for (std::size_t k = 0; k < n; ++k) {
      IntVector g(n);
      for (auto& x : g) x = entry(rng);
      if (!is_zero(g)) gens.push_back(g);
    }
    const RationalCone cone(n, gens);
    if (cone.generators().empty() || !oracle::is_pointed(cone.generators())) continue;
    EXPECT_TRUE(is_pointed(cone));
    const auto h = hilbert_basis(cone);
    oracle::Representability rep(cone.generators(), h.generators);
    oracle::for_each_box_point(n, 3, [&](const IntVector& x) {
      if (rep.member(x)) {
        EXPECT_TRUE(rep(x));
      }
    });
    ++checked;
  }
}
