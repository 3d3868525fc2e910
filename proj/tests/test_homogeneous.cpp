#include "fixtures.hpp"
#include "protoric/homogeneous.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace protoric;

namespace {

PolarComplex pc(long rho, long t_num, long t_den) { return PolarComplex(Rational(rho), Rational(t_num, t_den)); }

}  // namespace

TEST(Discriminant, Membership) {
  const HomogeneousModel cp2(fixtures::cp2());
  EXPECT_TRUE(cp2.in_discriminant({PolarComplex::zero(), PolarComplex::zero(), PolarComplex::zero()}));
  EXPECT_FALSE(cp2.in_discriminant({PolarComplex::one(), PolarComplex::zero(), PolarComplex::zero()}));
  const HomogeneousModel p1p1(fixtures::cp1xcp1());
  EXPECT_TRUE(p1p1.in_discriminant(
      {PolarComplex::zero(), PolarComplex::zero(), PolarComplex::one(), PolarComplex::one()}));
  EXPECT_THROW(p1p1.point(1, {PolarComplex::zero(), PolarComplex::zero(), PolarComplex::one(), PolarComplex::one()}),
               domain_error);
}

TEST(Act, Examples) {
  const HomogeneousModel cp1(fixtures::cp1());
  const auto z = cp1.point(1, {PolarComplex::one(), PolarComplex::one()});
  EXPECT_EQ(cp1.act(cp1.torus(1, {PolarComplex::one()}), z), z);
  EXPECT_EQ(cp1.act(cp1.torus(1, {pc(2, 0, 1)}), z).coords, (std::vector<PolarComplex>{pc(2, 0, 1), pc(2, 0, 1)}));
  EXPECT_THROW(cp1.torus(1, {PolarComplex::zero()}), domain_error);
  EXPECT_THROW(cp1.act(cp1.torus(2, {PolarComplex::one()}), z), domain_error);
}

TEST(PowerMap, Examples) {
  const HomogeneousModel cp2(fixtures::cp2());
  const auto z = cp2.point(1, {pc(1, 1, 3), pc(1, 0, 1), pc(2, 1, 2)});
  EXPECT_EQ(cp2.power_map(1, z), z);
  EXPECT_EQ(cp2.power_map(3, z).coords, (std::vector<PolarComplex>{pc(1, 0, 1), pc(1, 0, 1), pc(8, 1, 2)}));
  EXPECT_THROW(cp2.power_map(0, z), domain_error);
}

TEST(Equivariance, WorkedExample) {
  const HomogeneousModel cp1(fixtures::cp1());
  const auto t = cp1.torus(1, {pc(1, 1, 6)});
  const auto z = cp1.point(1, {pc(1, 0, 1), pc(1, 1, 4)});
  const std::vector<PolarComplex> expected{pc(1, 1, 3), pc(1, 5, 6)};
  EXPECT_EQ(cp1.power_map(2, cp1.act(t, z)).coords, expected);
  auto t2 = t;
  t2.params[0] = t2.params[0].pow(2);
  EXPECT_EQ(cp1.act(t2, cp1.power_map(2, z)).coords, expected);
  EXPECT_TRUE(cp1.check_equivariance(t, z, 2));
  EXPECT_TRUE(cp1.check_equivariance(t, z, 1));
}

TEST(SameOrbit, Examples) {
  const HomogeneousModel cp1(fixtures::cp1());
  const auto z = cp1.point(1, {pc(1, 0, 1), pc(1, 0, 1)});
  EXPECT_EQ(cp1.same_orbit(z, z), OrbitDecision::same);
  EXPECT_EQ(cp1.same_orbit(z, cp1.act(cp1.torus(1, {pc(5, 2, 7)}), z)), OrbitDecision::same);
  EXPECT_EQ(cp1.same_orbit(z, cp1.point(1, {pc(2, 0, 1), pc(3, 0, 1)})), OrbitDecision::different);
  EXPECT_EQ(cp1.same_orbit(z, cp1.point(1, {pc(1, 1, 2), pc(1, 0, 1)})), OrbitDecision::different);
  EXPECT_EQ(cp1.same_orbit(z, cp1.point(1, {PolarComplex::zero(), pc(1, 0, 1)})), OrbitDecision::different);
}

TEST(SameOrbit, RandomActionsAreRecognised) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> small(1, 6);
  for (const Fan& f : {fixtures::cp2(), fixtures::cp1xcp1(), fixtures::hirzebruch(2), fixtures::cp11n(3)}) {
    const HomogeneousModel m(f);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<PolarComplex> coords;
      for (std::size_t i = 0; i < m.ray_count(); ++i)
        coords.emplace_back(Rational(small(rng), small(rng)), Rational(small(rng), small(rng)));
      std::vector<PolarComplex> params;
      for (std::size_t j = 0; j < m.torus_rank(); ++j)
        params.emplace_back(Rational(small(rng), small(rng)), Rational(small(rng), small(rng)));
      const auto z = m.point(1, coords);
      EXPECT_EQ(m.same_orbit(z, m.act(m.torus(1, params), z)), OrbitDecision::same) << f.name();
    }
  }
}

TEST(SameOrbit, TorsionGivesUndecided) {
  // G ≅ Z/2 here: no identity-component element relates the points
  const Fan f = Fan::build(2, {fixtures::v({1, 0}), fixtures::v({1, 2})}, {{0, 1}}, false);
  const HomogeneousModel m(f);
  const auto z = m.point(1, {pc(1, 0, 1), pc(1, 0, 1)});
  const auto w = m.point(1, {pc(1, 1, 2), pc(1, 0, 1)});
  EXPECT_EQ(m.same_orbit(z, w), OrbitDecision::undecided);
  EXPECT_EQ(m.same_orbit(z, z), OrbitDecision::same);
}
