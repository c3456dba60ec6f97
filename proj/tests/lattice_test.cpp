#include "hexafern/count.hpp"
#include "hexafern/lattice.hpp"
#include "hexafern/regions.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace hexafern;

TEST(Lattice, TriCoordOrder) {
  EXPECT_LT(up(0, 5), down(0, 5));
  EXPECT_LT(down(0, 5), up(0, 6));
  EXPECT_LT(down(0, 9), up(1, 0));
  EXPECT_EQ(to_string(up(2, 3)), "U(2,3)");
}

TEST(Lattice, NeighborsFollowConvention) {
  auto n = neighbors(up(3, 3));
  std::sort(n.begin(), n.end());
  EXPECT_EQ(n, (std::vector<TriCoord>{down(3, 2), down(3, 3), down(4, 2)}));
  n = neighbors(down(3, 3));
  std::sort(n.begin(), n.end());
  EXPECT_EQ(n, (std::vector<TriCoord>{up(2, 4), up(3, 3), up(3, 4)}));
  EXPECT_EQ(neighbors(up(0, 0)).size(), 1U);  // Down(0,-1) and Down(1,-1) not addressable
}

TEST(Lattice, AdjacencyIsSymmetricOnPatch) {
  for (int r = 0; r < 10; ++r) {
    for (int c = 0; c < 10; ++c) {
      for (TriCoord t : {up(r, c), down(r, c)}) {
        for (const TriCoord& u : neighbors(t)) {
          EXPECT_NE(u.orient, t.orient);
          const auto back = neighbors(u);
          EXPECT_NE(std::find(back.begin(), back.end(), t), back.end()) << to_string(t) << " " << to_string(u);
        }
      }
    }
  }
}

TEST(Lattice, LozengeKinds) {
  EXPECT_EQ(make_lozenge(up(2, 2), down(2, 2))->kind, LozengeKind::RightTilting);
  EXPECT_EQ(make_lozenge(down(2, 1), up(2, 2))->kind, LozengeKind::LeftTilting);
  EXPECT_EQ(make_lozenge(up(2, 2), down(3, 1))->kind, LozengeKind::Vertical);
  EXPECT_FALSE(make_lozenge(up(2, 2), down(2, 4)).has_value());
  EXPECT_FALSE(make_lozenge(up(2, 2), up(2, 3)).has_value());
  const auto l = *make_lozenge(down(2, 2), up(2, 2));
  EXPECT_EQ(l.first, up(2, 2));
  EXPECT_EQ(l.second, down(2, 2));
}

TEST(Lattice, WeightedRegionValidation) {
  const std::vector<TriCoord> cells{up(0, 1), down(0, 1), down(0, 0)};
  const Lozenge l = *make_lozenge(up(0, 1), down(0, 1));
  WeightedRegion r(cells, {{l, ratio(1, 2)}});
  EXPECT_EQ(r.size(), 3U);
  EXPECT_EQ(r.weight(l), ratio(1, 2));
  EXPECT_EQ(r.up_count(), 1U);
  EXPECT_EQ(r.down_count(), 2U);
  EXPECT_FALSE(is_balanced(r));
  EXPECT_THROW(WeightedRegion(cells, {{l, Rational(0)}}), std::invalid_argument);
  const Lozenge outside = *make_lozenge(up(0, 1), down(1, 0));
  EXPECT_THROW(WeightedRegion(cells, {{outside, Rational(2)}}), std::invalid_argument);
  // dropping a cell drops the weight on its lozenge
  EXPECT_TRUE(r.without({down(0, 1)}).weights().empty());
}

TEST(Lattice, TilingValidity) {
  const WeightedRegion r({up(0, 1), down(0, 1)});
  Tiling t{{*make_lozenge(up(0, 1), down(0, 1))}};
  EXPECT_TRUE(is_valid_tiling(r, t));
  EXPECT_EQ(tiling_weight(r, t), 1);
  t.lozenges.push_back(t.lozenges[0]);
  EXPECT_FALSE(is_valid_tiling(r, t));
}

TEST(Lattice, ForcedReducePreservesCount) {
  for (const auto& r : {build_P(1, 2, 1), build_P_primed(2, 3, 1), build_R(1, 2, 1, {1, 1}), build_R_primed(0, 3, 1, {2}),
                        build_Q_primed({1, 2, 0, 1}), build_L_bar(3, 2, {1, 3})}) {
    const Reduction red = forced_reduce(r);
    const Rational full = count_tilings(r).value;
    const Rational rest = red.region.empty() ? Rational(red.multiplier == 0 ? 0 : 1) : count_tilings(red.region).value;
    EXPECT_EQ(full, red.multiplier * rest);
    // removed lozenges are disjoint and cover exactly the dropped cells
    std::set<TriCoord> covered;
    for (const auto& l : red.removed) {
      EXPECT_TRUE(covered.insert(l.first).second);
      EXPECT_TRUE(covered.insert(l.second).second);
    }
    EXPECT_EQ(covered.size() + red.region.size(), red.multiplier == 0 ? covered.size() : r.size());
  }
}

TEST(Lattice, ForcedReduceDetectsDeadCell) {
  const WeightedRegion r({up(0, 1), down(0, 1), up(2, 5), down(2, 5), down(5, 5)});
  const Reduction red = forced_reduce(r);
  EXPECT_EQ(red.multiplier, 0);
  EXPECT_TRUE(red.region.empty());
}
