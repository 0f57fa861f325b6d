#include <gtest/gtest.h>

#include "display.hpp"
#include "motivic/bundles.hpp"
#include "motivic/verify.hpp"

namespace motivic {
namespace {

using display::Cj;
using display::T;

TEST(Bundles, Genus2Display) {
  const int g = 2;
  const MotiveClass expected =
      T(g, {0, 8}) + Cj(1, g) * T(g, {1, 2, 5, 6}) + Cj(2, g) * T(g, {2, 4}) + tate_twist(Cj(1, g) * Cj(1, g), 3);
  EXPECT_EQ(bundle_motive_fixed_det({g, 1}), expected);
  EXPECT_EQ(bundle_motive({g, 1}), jacobian(g) * expected);
}

TEST(Bundles, Genus3Display) {
  const int g = 3;
  const MotiveClass expected = T(g, {0, 16}) + Cj(1, g) * T(g, {1, 2, 13, 14}) + Cj(2, g) * T(g, {2, 4, 10, 12}) +
                               Cj(1, g) * Cj(1, g) * T(g, {3, 11}) + Cj(3, g) * T(g, {3, 6, 7, 10}) +
                               Cj(1, g) * Cj(2, g) * T(g, {4, 5, 8, 9}) + Cj(4, g) * T(g, {4, 8}) +
                               Cj(1, g) * Cj(3, g) * T(g, {5, 7}) + tate_twist(Cj(2, g) * Cj(2, g), 6);
  EXPECT_EQ(bundle_motive({g, 1}), jacobian(g) * expected);
  EXPECT_EQ(bundle_motive({g, 2}), jacobian(g) * expected);
}

TEST(Bundles, TopDegreeAndUnit) {
  for (int g = 2; g <= 5; ++g) {
    const MotiveClass nl = bundle_motive_fixed_det({g, 1});
    const IntPoly p = poincare(nl);
    EXPECT_EQ(p.degree(), 2 * 8 * (g - 1));
    EXPECT_EQ(p.coeff(0), 1);
    EXPECT_EQ(nl.coeff(SymMonomial{}).coeff(0), 1);
    EXPECT_TRUE(nl.is_effective());
  }
}

TEST(Bundles, KunnethFactor) {
  for (int g = 2; g <= 4; ++g) {
    const Integer fixed = poincare(bundle_motive_fixed_det({g, 1})).eval(Integer(1));
    EXPECT_EQ(poincare(bundle_motive({g, 1})).eval(Integer(1)), fixed * (Integer(1) << (2 * g)));
  }
}

TEST(Bundles, DualityAndPicardRank) {
  for (int g = 2; g <= 5; ++g) {
    const BiPoly h = hodge_realize(bundle_motive_fixed_det({g, 1}));
    EXPECT_TRUE(has_poincare_duality(h, 8 * (g - 1))) << "g=" << g;
    EXPECT_TRUE(has_hodge_symmetry(h)) << "g=" << g;
    EXPECT_EQ(h.coeff(1, 1), 1) << "g=" << g;
    EXPECT_EQ(h.coeff(0, 0), 1);
    EXPECT_EQ(h.coeff(1, 0), 0);
  }
}

TEST(Bundles, PoincarePalindromic) {
  const IntPoly p = poincare(bundle_motive_fixed_det({2, 1}));
  for (int k = 0; k <= 16; ++k) EXPECT_EQ(p.coeff(k), p.coeff(16 - k));
}

TEST(Bundles, IndexSetCount) {
  for (int g = 2; g <= 8; ++g) {
    const auto idx = bundle_index_set(g);
    EXPECT_EQ(static_cast<int>(idx.size()), (2 * g - 1) * (g - 1) + g - 1) << "g=" << g;
    for (auto [k1, k2] : idx) {
      EXPECT_GE(k1, 0);
      EXPECT_GE(k2, 0);
      EXPECT_TRUE(k1 + k2 < 2 * g - 2 || (k1 + k2 == 2 * g - 2 && k1 < g - 1));
    }
  }
}

TEST(Bundles, DegreeIndependence) {
  for (int g = 2; g <= 4; ++g)
    for (int d : {-5, -1, 2, 4, 7}) EXPECT_EQ(bundle_motive_fixed_det({g, d}), bundle_motive_fixed_det({g, 1}));
}

TEST(Bundles, InvalidInput) {
  EXPECT_THROW(bundle_motive({2, 3}), InvalidDegree);
  EXPECT_THROW(bundle_motive({2, 0}), InvalidDegree);
  EXPECT_THROW(bundle_motive({2, -6}), InvalidDegree);
  EXPECT_THROW(bundle_motive({1, 1}), InvalidArgument);
}

}  // namespace
}  // namespace motivic
