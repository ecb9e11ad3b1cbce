#include "seppart/gaussian.hpp"

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace seppart {
namespace {

std::vector<long long> as_ll(const QBinomial& g) { return {g.poly.begin(), g.poly.end()}; }

TEST(GaussianTest, SmallValues) {
  for (int k = 1; k <= 4; ++k) {
    for (int b = 0; b <= 5; ++b) EXPECT_EQ(as_ll(gaussian(b, 0, k)), std::vector<long long>{1});
    std::vector<long long> expected(k + 1, 0);
    expected[0] = expected[k] = 1;
    EXPECT_EQ(as_ll(gaussian(2, 1, k)), expected);
  }
  EXPECT_EQ(as_ll(gaussian(4, 2, 1)), (std::vector<long long>{1, 1, 2, 1, 1}));
  EXPECT_TRUE(gaussian(2, 3, 1).is_zero());
  EXPECT_TRUE(gaussian(3, -1, 2).is_zero());
  EXPECT_TRUE(gaussian(-1, -1, 2).is_zero());
}

TEST(GaussianTest, MatchesRatioDefinition) {
  for (int k = 1; k <= 3; ++k) {
    for (int a = 0; a <= 10; ++a) {
      for (int b = -1; b <= a + 1; ++b) {
        EXPECT_EQ(as_ll(gaussian(a, b, k)), oracle::gaussian_by_ratio(a, b, k)) << a << " " << b << " " << k;
      }
    }
  }
}

TEST(GaussianTest, PropertySuite) {
  for (int k = 1; k <= 5; ++k) {
    for (int a = 0; a <= 12; ++a) {
      for (int b = 0; b <= a; ++b) {
        const QBinomial g = gaussian(a, b, k);
        EXPECT_EQ(g.poly, gaussian(a, a - b, k).poly);
        EXPECT_EQ(g.degree(), k * b * (a - b));
        Coeff sum = 0;
        for (Coeff c : g.poly) {
          EXPECT_GE(c, 0);
          sum += c;
        }
        EXPECT_EQ(sum, oracle::binomial(a, b));
        if (a >= 1) {
          // [a b] = [a-1 b-1] + q^{kb} [a-1 b]
          std::vector<Coeff> rhs(g.poly.size(), 0);
          const auto left = gaussian(a - 1, b - 1, k).poly;
          const auto right = gaussian(a - 1, b, k).poly;
          for (std::size_t d = 0; d < left.size(); ++d) rhs[d] += left[d];
          for (std::size_t d = 0; d < right.size(); ++d) rhs[d + k * b] += right[d];
          EXPECT_EQ(g.poly, rhs);
        }
      }
    }
  }
}

TEST(GaussianTest, ColumnSumIdentity) {
  for (int a = 0; a <= 10; ++a) {
    for (int b = 0; b <= 10; ++b) {
      const auto lhs = gaussian(a + b + 1, b + 1, 1).poly;
      std::vector<Coeff> rhs(lhs.size(), 0);
      for (int s = 0; s <= a; ++s) {
        const auto term = gaussian(b + s, b, 1).poly;
        for (std::size_t d = 0; d < term.size(); ++d) rhs[d + s] += term[d];
      }
      EXPECT_EQ(lhs, rhs) << a << " " << b;
    }
  }
}

TEST(GaussianTest, EmbeddingTruncates) {
  const TruncatedSeries s = to_series(gaussian(4, 2, 1), 2);
  EXPECT_EQ(s.coeff(0), 1);
  EXPECT_EQ(s.coeff(1), 1);
  EXPECT_EQ(s.coeff(2), 2);
  EXPECT_EQ(s.size(), 3u);
}

}  // namespace
}  // namespace seppart
