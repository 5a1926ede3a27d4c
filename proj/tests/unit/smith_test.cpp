#include "oracles.hpp"
#include "seifert/smith.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace seifert;

namespace {

std::vector<BigInt> factors(const IntMatrix& m) { return smith_normal_form(m).invariant_factors; }

}  // namespace

TEST(Smith, DiagonalExample) {
  EXPECT_EQ(factors(IntMatrix{{2, 0}, {0, 3}}), (std::vector<BigInt>{1, 6}));
  EXPECT_EQ(factors(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}), (std::vector<BigInt>{2, 6, 12}));
}

TEST(Smith, ZeroAndEmptyMatrices) {
  EXPECT_TRUE(factors(IntMatrix(3, 2)).empty());
  auto snf = smith_normal_form(IntMatrix(0, 3));
  EXPECT_EQ(to_string(cokernel(snf)), "Z^3");
  EXPECT_EQ(to_string(cokernel(smith_normal_form(IntMatrix(0, 0)))), "0");
}

TEST(Smith, CokernelNames) {
  EXPECT_EQ(to_string(cokernel(smith_normal_form(IntMatrix{{2, 0, 0}, {0, 0, 0}}))), "Z^2 + Z/2");
  EXPECT_EQ(to_string(cokernel(smith_normal_form(IntMatrix{{1, 1}}))), "Z");
  EXPECT_EQ(to_string(cokernel(smith_normal_form(IntMatrix{{4, 0}, {0, 6}}))), "Z/2 + Z/12");
}

TEST(Smith, MatchesDeterminantalDivisors) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    std::size_t r = static_cast<std::size_t>(oracle::uniform(rng, 1, 4));
    std::size_t c = static_cast<std::size_t>(oracle::uniform(rng, 1, 4));
    IntMatrix m = oracle::random_matrix(rng, r, c, 6);
    auto d = factors(m);
    BigInt prefix = 1;
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
      BigInt dk = oracle::determinantal_divisor(m, k);
      if (dk == 0) {
        EXPECT_EQ(d.size(), k - 1);
        break;
      }
      ASSERT_GE(d.size(), k);
      prefix *= d[k - 1];
      EXPECT_EQ(prefix, dk);
    }
  }
}

TEST(Smith, DivisibilityChainAndDeterminant) {
  std::mt19937_64 rng(18);
  for (int i = 0; i < 200; ++i) {
    IntMatrix m = oracle::random_matrix(rng, 4, 4, 9);
    auto d = factors(m);
    for (std::size_t k = 1; k < d.size(); ++k) EXPECT_EQ(d[k] % d[k - 1], 0);
    std::vector<std::vector<BigInt>> rows(4, std::vector<BigInt>(4));
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) rows[a][b] = m(a, b);
    BigInt det = abs(oracle::det(rows));
    if (det != 0) {
      BigInt product = 1;
      for (const auto& x : d) product *= x;
      EXPECT_EQ(product, det);
    } else {
      EXPECT_LT(d.size(), 4u);
    }
  }
}

TEST(Smith, LargeEntriesStayExact) {
  IntMatrix m{{1000000007LL * 3, 0}, {0, 1000000007LL * 1000000009LL}};
  auto d = factors(m);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0], 1000000007LL);
  EXPECT_EQ(d[1], BigInt(3) * 1000000007LL * 1000000009LL);
}
