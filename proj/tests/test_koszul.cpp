#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace brlb;

TEST(Wedge, BasisSizesAreBinomials) {
  for (std::size_t n = 1; n <= 7; ++n)
    for (std::size_t p = 0; p <= n; ++p) EXPECT_EQ(WedgeBasis(n, p).size(), oracle::binomial(n, p));
}

TEST(Wedge, SquareOfWedgeIsZeroAndWedgesAnticommute) {
  SeededRng rng(1);
  for (std::size_t n = 3; n <= 6; ++n)
    for (std::size_t p = 0; p + 2 <= n; ++p) {
      const auto u = rng.vector<Rational>(n), v = rng.vector<Rational>(n);
      EXPECT_TRUE((wedge_map(p + 1, v) * wedge_map(p, v)).is_zero());
      EXPECT_TRUE(wedge_map(p + 1, v) * wedge_map(p, u) + wedge_map(p + 1, u) * wedge_map(p, v) ==
                  Matrix<Rational>(WedgeBasis(n, p + 2).size(), WedgeBasis(n, p).size()));
    }
}

TEST(Koszul, RankOneConstantIsCentralBinomial) {
  // a^: Lambda^p -> Lambda^(p+1) of C^(2p+1) has kernel a ^ Lambda^(p-1), so its rank is
  // C(2p+1, p) - C(2p, p-1) = C(2p, p).
  for (std::size_t p = 0; p <= 4; ++p) EXPECT_EQ(koszul_rank_one_constant(p), oracle::binomial(2 * p, p)) << "p=" << p;
}

TEST(Koszul, RandomRankOneTensorsAttainTheConstant) {
  SeededRng rng(2);
  for (std::size_t p = 1; p <= 2; ++p) {
    const auto t = Tensor3<Rational>::outer(rng.vector<Rational>(2 * p + 1), rng.vector<Rational>(3), rng.vector<Rational>(4));
    EXPECT_EQ(rank(build_koszul(t, p)), koszul_rank_one_constant(p));
  }
}

TEST(Koszul, MatrixMultiplicationTwo) {
  const auto kb = koszul_bound(matmul<Fp>(2, 2, 2), 1, Factor::A, 3);
  EXPECT_EQ(kb.bound, 6u);
  EXPECT_TRUE(kb.restricted);
  // the same over Q
  EXPECT_EQ(koszul_bound(matmul<Rational>(2, 2, 2), 1, Factor::A, 3).bound, 6u);
}

TEST(Koszul, UnitTensorsAreNotSeparated) {
  for (std::size_t m = 3; m <= 6; ++m)
    for (std::size_t p = 1; 2 * p + 1 <= m; ++p) EXPECT_EQ(koszul_bound(unit_tensor<Fp>(m), p, Factor::A, 9).bound, m);
}

TEST(Koszul, SmallCoppersmithWinogradTwo) {
  EXPECT_EQ(koszul_bound(small_cw<Rational>(2), 1, Factor::A, 4).bound, 4u);
}

TEST(Koszul, NeverExceedsTwoMMinusOne) {
  SeededRng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = 3 + trial % 3;
    const auto t = Tensor3<Fp>::random({m, m, m}, rng);
    for (std::size_t p = 1; 2 * p + 1 <= m; ++p) EXPECT_LE(koszul_bound(t, p, Factor::A, rng.fork()).bound, 2 * m - 1);
  }
}

TEST(Koszul, RejectsTooSmallFactor) {
  EXPECT_THROW(koszul_bound(unit_tensor<Fp>(2), 1, Factor::A, 0), std::invalid_argument);
  EXPECT_THROW(build_koszul(unit_tensor<Rational>(4), 1), std::invalid_argument);
}

TEST(Koszul, InvariantUnderGl) {
  SeededRng rng(6);
  const auto t = matmul<Rational>(2, 2, 2);
  const auto g = apply_gl(t, random_invertible<Rational>(4, rng), random_invertible<Rational>(4, rng),
                          random_invertible<Rational>(4, rng));
  EXPECT_EQ(koszul_bound(g, 1, Factor::B, 7).bound, 6u);
}
