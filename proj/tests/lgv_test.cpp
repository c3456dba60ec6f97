#include "hexafern/count.hpp"
#include "hexafern/formulas.hpp"
#include "hexafern/lgv.hpp"
#include "hexafern/regions.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hexafern;

namespace {

Rational cofactor_det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Rational det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Rational>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rational> row;
      for (std::size_t jj = 0; jj < n; ++jj) {
        if (jj != j) row.push_back(m[i][jj]);
      }
      minor.push_back(row);
    }
    const Rational term = m[0][j] * cofactor_det(minor);
    det += j % 2 == 0 ? term : Rational(-term);
  }
  return det;
}

}  // namespace

TEST(Lgv, DeterminantsAgreeWithCofactorExpansion) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  for (std::size_t n = 0; n <= 4; ++n) {
    for (int rep = 0; rep < 25; ++rep) {
      std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
      for (auto& row : rows) {
        for (auto& e : row) e = ratio(num(rng), den(rng));
      }
      if (rep % 5 == 0 && n >= 2) rows[1] = rows[0];  // singular now and then
      const RationalMatrix m(rows);
      const Rational expected = cofactor_det(rows);
      EXPECT_EQ(determinant_exact(m), expected);
      EXPECT_EQ(determinant_bareiss(m), expected);
    }
  }
}

TEST(Lgv, NeedsPivoting) {
  const RationalMatrix m({{0, 1}, {1, 0}});
  EXPECT_EQ(determinant_exact(m), -1);
  EXPECT_EQ(determinant_bareiss(m), -1);
  EXPECT_EQ(determinant_exact(RationalMatrix::identity(3)), 1);
}

TEST(Lgv, MatrixEntries) {
  // first column: C(a-2, -1)/2 + C(a-2, 0) = 1, also for a = 1
  const auto m = lgv_matrix_Lbar_odd({1, 2, 4});
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(m.at(i, 0), 1);
  // a = 4, j = 2: C(3,1)/2 + C(3,2) = 9/2
  EXPECT_EQ(m.at(2, 1), ratio(9, 2));
  EXPECT_THROW(lgv_matrix_Lbar_odd({2, 2}), std::invalid_argument);
}

TEST(Lgv, DeterminantCountsBarRegion) {
  for (const std::vector<int>& pos : std::vector<std::vector<int>>{{1}, {3}, {1, 2}, {2, 5}, {1, 3, 6}, {2, 4, 5}}) {
    const int k = static_cast<int>(pos.size());
    const Rational det = determinant_exact(lgv_matrix_Lbar_odd(pos));
    EXPECT_EQ(det, count_tilings(build_L_bar(2 * k - 1, 6 - k, pos)).value);
    EXPECT_EQ(det, eval_L(2 * k - 1, 6 - k, pos, LVariant::bar_odd).value);
  }
}

TEST(Lgv, KrattenthalerSmall) {
  // k = 1: the 1x1 matrix is 1
  EXPECT_EQ(krattenthaler_product({5}, {}, 3), 1);
  const std::vector<Rational> X{1, ratio(1, 2), 3}, A{2, ratio(-1, 3)};
  EXPECT_EQ(determinant_exact(krattenthaler_matrix(X, A, ratio(5, 7))), krattenthaler_product(X, A, ratio(5, 7)));
}
