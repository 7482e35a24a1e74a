#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace brlb;

namespace {

Matrix<Rational> small_matrix(std::size_t r, std::size_t c, SeededRng& rng, int lo = -4, int hi = 4) {
  Matrix<Rational> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.small_scalar<Rational>(lo, hi);
  return m;
}

/// Random matrix of prescribed rank: product of r x k and k x c factors.
Matrix<Rational> matrix_of_rank(std::size_t r, std::size_t c, std::size_t k, SeededRng& rng) {
  return small_matrix(r, k, rng) * small_matrix(k, c, rng);
}

}  // namespace

TEST(Field, FpArithmeticAndInverse) {
  PrimeFieldScope scope(101);
  const Fp a(37), b(-5);
  EXPECT_EQ((a * scalar_traits<Fp>::inverse(a)).value(), 1u);
  EXPECT_EQ(b.value(), 96u);
  EXPECT_EQ((a + b).value(), 32u);
  EXPECT_THROW(scalar_traits<Fp>::inverse(Fp(0)), std::domain_error);
  EXPECT_EQ(scalar_traits<Fp>::field_tag(), "prime:101");
}

TEST(Field, MersenneDefaultAndRationalReduction) {
  EXPECT_EQ(Fp::modulus(), kMersenne61);
  const Fp half = scalar_traits<Fp>::from_rational(Rational(1, 2));
  EXPECT_EQ((half * Fp(2)).value(), 1u);
  EXPECT_THROW(PrimeFieldScope(100), std::invalid_argument);
}

TEST(Field, ParseRational) {
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("12"), Rational(12));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}

TEST(Random, SameSeedSameStream) {
  SeededRng a(7), b(7);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(a.next(), b.next());
  EXPECT_THROW(seeded_random_vector<Rational>(0, 1), std::invalid_argument);
}

TEST(Linalg, DeterminantMatchesLeibniz) {
  SeededRng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const auto m = small_matrix(n, n, rng);
    EXPECT_EQ(determinant(m), oracle::det(oracle::rows_of(m)));
  }
}

TEST(Linalg, AdjugateMatchesCofactorsIncludingSingular) {
  SeededRng rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 5;
    // every third matrix has rank n-1, every fourth rank n-2
    const std::size_t k = trial % 3 == 0 ? n - 1 : (trial % 4 == 0 && n >= 2 ? n - 2 : n);
    const auto m = k == n ? small_matrix(n, n, rng) : matrix_of_rank(n, n, std::max<std::size_t>(k, 0), rng);
    const auto adj = adjugate(m);
    EXPECT_EQ(oracle::rows_of(adj), oracle::adjugate(oracle::rows_of(m))) << "n=" << n << " k=" << k;
    // A adj(A) = adj(A) A = det(A) I
    const auto d = determinant(m);
    const auto di = Matrix<Rational>::identity(n) * d;
    EXPECT_TRUE(m * adj == di);
    EXPECT_TRUE(adj * m == di);
  }
}

TEST(Linalg, RankOverQMatchesOracleAndBoundsRankModP) {
  SeededRng rng(13);
  constexpr long long p = 7;
  PrimeFieldScope scope(p);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + trial % 6, c = 1 + (trial / 6) % 6, k = trial % 4;
    const auto m = k == 0 ? small_matrix(r, c, rng, -9, 9) : matrix_of_rank(r, c, k, rng);
    const auto rq = rank(m);
    EXPECT_EQ(rq, oracle::rank(oracle::rows_of(m)));
    std::vector<std::vector<long long>> ints(r, std::vector<long long>(c));
    Matrix<Fp> mp(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        ints[i][j] = m(i, j).get_num().get_si();
        mp(i, j) = scalar_traits<Fp>::from_rational(m(i, j));
      }
    const auto rp = rank(mp);
    EXPECT_EQ(rp, oracle::rank_mod(ints, p));
    EXPECT_LE(rp, rq);
  }
}

TEST(Linalg, InverseAndKernel) {
  SeededRng rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = small_matrix(4, 4, rng);
    if (determinant(m) == 0) {
      EXPECT_THROW(inverse(m), std::domain_error);
      continue;
    }
    EXPECT_TRUE(m * inverse(m) == Matrix<Rational>::identity(4));
  }
  const auto m = matrix_of_rank(5, 7, 3, rng);
  const auto ker = kernel_basis(m);
  EXPECT_EQ(ker.dim(), 7u - rank(m));
  for (std::size_t i = 0; i < ker.dim(); ++i) {
    for (const auto& x : m.apply(ker.basis_vector(i))) EXPECT_EQ(x, 0);
  }
}

TEST(Linalg, IntersectionDimensionFollowsInclusionExclusion) {
  SeededRng rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const std::size_t du = rng.below(n + 1), dv = rng.below(n + 1);
    // share a common piece so intersections are not always minimal
    const std::size_t shared = std::min<std::size_t>({du, dv, rng.below(3)});
    const auto common = small_matrix(shared, n, rng);
    auto u = Subspace<Rational>::span(common.vstack(small_matrix(du - shared, n, rng)));
    auto v = Subspace<Rational>::span(common.vstack(small_matrix(dv - shared, n, rng)));
    const auto inter = subspace_intersect<Rational>({u, v});
    const auto sum = subspace_sum(u, v);
    EXPECT_EQ(inter.dim() + sum.dim(), u.dim() + v.dim());
    EXPECT_TRUE(u.contains(inter));
    EXPECT_TRUE(v.contains(inter));
    EXPECT_TRUE(sum.contains(u));
    EXPECT_TRUE(sum.contains(v));
  }
}

TEST(Linalg, SubspaceEqualityIgnoresGenerators) {
  SeededRng rng(16);
  const auto g = small_matrix(3, 6, rng);
  const auto mix = small_matrix(3, 3, rng);
  if (determinant(mix) != 0) {
    EXPECT_TRUE(Subspace<Rational>::span(g) == Subspace<Rational>::span(mix * g));
  }
  EXPECT_EQ(Subspace<Rational>::whole(5).dim(), 5u);
}
