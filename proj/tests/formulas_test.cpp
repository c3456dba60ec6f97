#include "hexafern/formulas.hpp"

#include <gtest/gtest.h>

using namespace hexafern;

TEST(Formulas, HalvedHexagons) {
  EXPECT_EQ(eval_proctor(1, 2, 1).value, 3);
  EXPECT_EQ(eval_proctor(2, 3, 2).value, 40);
  EXPECT_EQ(eval_proctor(0, 0, 5).value, 1);
  EXPECT_EQ(eval_ciucu_primed(1, 1, 1).value, ratio(3, 2));
  EXPECT_EQ(eval_ciucu_primed(2, 3, 2).value, 21);
}

TEST(Formulas, SkippingHyperfactorialPinnedByQPrimed) {
  // H2(5) = 1! 3! = 6 gives 3/2; a consecutive reading (1! 2! 3! = 12) would give 3
  EXPECT_EQ(eval_Q_primed({1, 1}).value, ratio(3, 2));
  EXPECT_EQ(eval_Q_primed({0, 1}).value, ratio(1, 2));
}

TEST(Formulas, QKFamilies) {
  EXPECT_EQ(eval_K({1, 1, 0, 2}).value, 5);
  EXPECT_EQ(eval_K_primed({1, 1, 0, 2}).value, ratio(5, 2));
  // leading (0,0) pairs do not change the region
  EXPECT_EQ(qk_value({0, 0, 1, 2}, QKind::Q), qk_value({1, 2}, QKind::Q));
  EXPECT_EQ(eval_Q({}).value, 1);
}

TEST(Formulas, QuarteredHexagons) {
  EXPECT_EQ(eval_L(3, 2, {1, 3}, LVariant::plain_odd).value, 3);
  EXPECT_EQ(eval_L(3, 2, {1, 3}, LVariant::bar_odd).value, 2);
  EXPECT_EQ(eval_L(4, 2, {2, 4}, LVariant::plain_even).value, 16);
  EXPECT_EQ(eval_L(4, 3, {1, 5}, LVariant::bar_even).value, ratio(15, 2));
  EXPECT_EQ(l_variant(4, true), LVariant::bar_even);
  EXPECT_THROW(eval_L(3, 2, {1, 3}, LVariant::plain_even), std::invalid_argument);
}

TEST(Formulas, FernRegions) {
  EXPECT_EQ(eval_R(0, 1, 1, {1}).value, 2);
  EXPECT_EQ(eval_R_primed(0, 1, 1, {1}).value, ratio(3, 4));
  EXPECT_EQ(eval_R(1, 3, 2, {3}).value, 152880);
  EXPECT_EQ(eval_R_primed(0, 1, 2, {3}).value, ratio(21, 8));
  EXPECT_EQ(eval_R_primed(1, 2, 1, {1, 2}).value, 385);
  EXPECT_EQ(eval_R(2, 3, 2, {2, 2, 2}).value, BigInt("3391318524642048"));
}

TEST(Formulas, Hypothesis) {
  EXPECT_TRUE(main_hypothesis(1, {1}));
  EXPECT_TRUE(main_hypothesis(0, {1}));  // 2 O(a) >= 2 a_1 always covers a non-empty fern
  EXPECT_TRUE(main_hypothesis(0, {1, 2, 1}));
  EXPECT_TRUE(main_hypothesis(1, {}));
  EXPECT_FALSE(main_hypothesis(0, {}));
  EXPECT_FALSE(eval_R(1, 0, 2, {}).hypothesis_ok);
}

TEST(Formulas, PhiFactors) {
  const auto c = phi_components(1, 2, 1, {1, 2}, false);
  EXPECT_EQ(c.f * c.g * c.h, phi(1, 2, 1, {1, 2}).value);
  EXPECT_EQ(phi(1, 2, 1, {1, 2}).value, eval_R(1, 2, 1, {1, 2}).value);
}

TEST(Formulas, TwoFernHexagon) {
  EXPECT_EQ(eval_F(1, 1, 1, {1}).value, 8);
  EXPECT_EQ(eval_F(2, 1, 1, {1}).value, 15);
  EXPECT_EQ(eval_F(1, 1, 0, {}).value, 1);
  EXPECT_THROW(eval_F(1, 0, 1, {1}), std::invalid_argument);
}

TEST(Formulas, OneTermFernAsHalvedHexagons) {
  for (int x = 0; x <= 3; ++x) {
    for (int y = 1; y <= 3; ++y) {
      for (int z = 0; z <= 2; ++z) {
        for (int a1 = 1; a1 <= 3; ++a1) {
          EXPECT_EQ(eval_R(x, y, z, {a1}).value, rohatgi_rhs(x, y, z, a1, false));
          EXPECT_EQ(eval_R_primed(x, y, z, {a1}).value, rohatgi_rhs(x, y, z, a1, true));
        }
      }
    }
  }
}

TEST(Formulas, EvaluateDispatch) {
  RegionSpec s;
  s.family = Family::Qp;
  s.t = {0, 1};
  EXPECT_EQ(evaluate(s).value, ratio(1, 2));
  s.family = Family::Rp;
  s.x = 0;
  s.y = 1;
  s.z = 1;
  s.fern = {1};
  EXPECT_EQ(evaluate(s).value, ratio(3, 4));
}
