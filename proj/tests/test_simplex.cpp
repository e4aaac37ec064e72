#include <gtest/gtest.h>

#include <random>

#include "levelkit/rational_simplex.hpp"

namespace levelkit::lp {
namespace {

std::vector<Rational> vec(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

bool satisfies(const Matrix& a, const std::vector<Rational>& rhs, const std::vector<Rational>& lower,
               const std::vector<Rational>& x) {
  for (std::size_t r = 0; r < a.size(); ++r) {
    Rational s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += a[r][j] * x[j];
    if (s != rhs[r]) return false;
  }
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] < lower[j]) return false;
  }
  return true;
}

TEST(FeasiblePoint, SingleEquationPicksBlandBasis) {
  // b1 + b2 − b4 = 0, b >= 1: the first pivot raises b4.
  Matrix a{vec({1, 1, 0, -1})};
  auto r = find_feasible_point(a, vec({0}), vec({1, 1, 1, 1}));
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.point, vec({1, 1, 1, 2}));
}

TEST(FeasiblePoint, DetectsInfeasibility) {
  // x1 − x2 = 0 and x1 + x3 − x2 = 0 force x3 = 0 < 1.
  Matrix a{vec({1, -1, 0}), vec({1, -1, 1})};
  EXPECT_FALSE(find_feasible_point(a, vec({0, 0}), vec({1, 1, 1})).feasible);
}

TEST(FeasiblePoint, HandlesDependentRows) {
  Matrix a{vec({1, -1, 0}), vec({2, -2, 0}), vec({0, 1, -1})};
  auto r = find_feasible_point(a, vec({0, 0, 0}), vec({1, 1, 1}));
  ASSERT_TRUE(r.feasible);
  EXPECT_TRUE(satisfies(a, vec({0, 0, 0}), vec({1, 1, 1}), r.point));
}

TEST(FeasiblePoint, RationalSolution) {
  // 2x = 3 with x >= 0.
  Matrix a{vec({2})};
  auto r = find_feasible_point(a, vec({3}), vec({0}));
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.point[0], Rational(3, 2));
}

TEST(FeasiblePoint, NegativeRhsRowsAreFlipped) {
  Matrix a{vec({1, 1})};
  EXPECT_FALSE(find_feasible_point(a, vec({-1}), vec({0, 0})).feasible);
  auto r = find_feasible_point(a, vec({5}), vec({0, 0}));
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.point[0] + r.point[1], 5);
}

TEST(FeasiblePoint, NoRows) {
  auto r = find_feasible_point({}, {}, vec({3, 4}));
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.point, vec({3, 4}));
}

// Small integer systems: feasibility must match a brute-force search over a
// box that is large enough for this family (coefficients in {−1, 0, 1}, two
// rows, three variables, rhs in [−2, 2], x >= 0 integral or rational).
TEST(FeasiblePoint, AgreesWithEnumerationOnTinySystems) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coeff(-1, 1);
  std::uniform_int_distribution<int> rhs_dist(-2, 2);
  for (int iter = 0; iter < 300; ++iter) {
    Matrix a(2, std::vector<Rational>(3));
    for (auto& row : a) {
      for (auto& v : row) v = coeff(rng);
    }
    std::vector<Rational> rhs{rhs_dist(rng), rhs_dist(rng)};
    const std::vector<Rational> lower(3, 0);
    auto r = find_feasible_point(a, rhs, lower);
    if (r.feasible) {
      EXPECT_TRUE(satisfies(a, rhs, lower, r.point));
      continue;
    }
    // Scaled search: any rational solution with these data has denominator
    // dividing a 2x2 minor (at most 2), so search halves up to 6.
    bool found = false;
    for (int x = 0; x <= 12 && !found; ++x) {
      for (int y = 0; y <= 12 && !found; ++y) {
        for (int z = 0; z <= 12 && !found; ++z) {
          found = satisfies(a, rhs, lower, {Rational(x, 2), Rational(y, 2), Rational(z, 2)});
        }
      }
    }
    EXPECT_FALSE(found) << "iteration " << iter;
  }
}

TEST(Echelon, ReducesAndDropsZeroRows) {
  Matrix a{vec({0, 0, 1, -1, 1}), vec({1, -1, 0, 0, 0}), vec({0, 0, 0, 1, -1}), vec({1, -1, 0, 0, 0})};
  auto e = reduced_row_echelon(a);
  ASSERT_EQ(e.rows.size(), 3u);
  EXPECT_EQ(e.pivot_columns, (std::vector<std::size_t>{0, 2, 3}));
  EXPECT_EQ(e.rows[0], vec({1, -1, 0, 0, 0}));
  EXPECT_EQ(e.rows[1], vec({0, 0, 1, 0, 0}));
  EXPECT_EQ(e.rows[2], vec({0, 0, 0, 1, -1}));
}

}  // namespace
}  // namespace levelkit::lp
