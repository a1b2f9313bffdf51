#include <gtest/gtest.h>

#include <cfloat>
#include <cmath>
#include <limits>
#include <vector>

#include "fixtures.hpp"
#include "generators.hpp"
#include "minctrl/controllability.hpp"
#include "minctrl/dense_matrix.hpp"
#include "minctrl/error.hpp"
#include "minctrl/jordan.hpp"
#include "minctrl/rank.hpp"
#include "minctrl/rational_matrix.hpp"
#include "oracles.hpp"

namespace minctrl {
namespace {

using testing::naive_krylov;
using testing::naive_rank;

TEST(DenseMatrix, RejectsNonFiniteAndWrongSize) {
  const std::vector<double> nan{1.0, std::numeric_limits<double>::quiet_NaN()};
  EXPECT_THROW(DenseMatrix(1, 2, nan), InvalidInput);
  const std::vector<double> inf{std::numeric_limits<double>::infinity()};
  EXPECT_THROW(DenseMatrix(1, 1, inf), InvalidInput);
  const std::vector<double> three{1, 2, 3};
  EXPECT_THROW(DenseMatrix(2, 2, three), InvalidInput);
}

TEST(DenseMatrix, HashIgnoresSignOfZero) {
  const std::vector<double> pos{0.0, 1.0};
  const std::vector<double> neg{-0.0, 1.0};
  EXPECT_EQ(DenseMatrix(1, 2, pos).hash(), DenseMatrix(1, 2, neg).hash());
  EXPECT_NE(DenseMatrix(1, 2, pos).hash(), DenseMatrix(2, 1, pos).hash());
}

TEST(RationalMatrix, EntriesAreCanonical) {
  RationalMatrix m(1, 2);
  m.set(0, 0, Rational(6, -4));
  EXPECT_EQ(m(0, 0).get_num(), -3);
  EXPECT_EQ(m(0, 0).get_den(), 2);
  const RationalMatrix built(1, 1, {Rational(10, 20)});
  EXPECT_EQ(built(0, 0).get_den(), 2);
}

TEST(RationalMatrix, ParseRational) {
  EXPECT_EQ(parse_rational("-7/2"), Rational(-7, 2));
  EXPECT_EQ(parse_rational("4/8"), Rational(1, 2));
  EXPECT_EQ(parse_rational("13"), Rational(13));
  EXPECT_EQ(parse_rational("-0.25"), Rational(-1, 4));
  EXPECT_THROW(parse_rational("1/0"), InvalidInput);
  EXPECT_THROW(parse_rational("1e3"), InvalidInput);
  EXPECT_THROW(parse_rational("abc"), InvalidInput);
  EXPECT_EQ(to_string(Rational(-7, 2)), "-7/2");
  EXPECT_EQ(to_string(Rational(8)), "8");
}

TEST(RationalMatrix, InverseRoundTrip) {
  testing::Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    const auto m = testing::random_invertible(rng, 5, 30, true);
    EXPECT_EQ(testing::naive_product(m, m.inverse()), RationalMatrix::identity(5));
  }
  EXPECT_THROW(RationalMatrix(2, 2).inverse(), InvalidInput);
}

TEST(RationalMatrix, FromDenseIsExact) {
  const std::vector<double> v{0.1, -3.5};
  const auto q = RationalMatrix::from_dense(DenseMatrix(1, 2, v));
  EXPECT_EQ(q(0, 0), Rational(0.1));
  EXPECT_EQ(q(0, 1), Rational(-7, 2));
  EXPECT_EQ(q.to_dense()(0, 0), 0.1);
}

TEST(Controllability, IdentityRepeatsColumn) {
  const std::vector<double> b{1, 0};
  const DenseMatrix c = controllability_matrix(DenseMatrix::identity(2), DenseMatrix::column(b));
  const std::vector<double> expected{1, 1, 0, 0};
  EXPECT_EQ(c, DenseMatrix(2, 2, expected));
  EXPECT_EQ(rank_numeric(c), 1u);
}

TEST(Controllability, DiagonalExample) {
  const std::vector<double> d{1, 2};
  const std::vector<double> b{1, 1};
  const DenseMatrix c = controllability_matrix(DenseMatrix::diagonal(d), DenseMatrix::column(b));
  const std::vector<double> expected{1, 1, 1, 2};
  EXPECT_EQ(c, DenseMatrix(2, 2, expected));
}

TEST(Controllability, ColumnBlocksInOrder) {
  const std::vector<double> a{0, 1, 0, 0};
  const DenseMatrix c = controllability_matrix(DenseMatrix(2, 2, a), DenseMatrix::identity(2));
  // [B, AB] with B = I.
  const std::vector<double> expected{1, 0, 0, 1, 0, 1, 0, 0};
  EXPECT_EQ(c, DenseMatrix(2, 4, expected));
}

TEST(Controllability, WorkedExampleFullRank) {
  const auto a = testing::worked_example_a();
  const auto b = testing::worked_example_b();
  const RationalMatrix bq(8, 1, RationalVector(b.begin(), b.end()));
  const auto c = controllability_matrix(a, bq);
  EXPECT_EQ(c, naive_krylov(a, RationalVector(b.begin(), b.end())));
  EXPECT_EQ(rank_exact(c), 8u);
  EXPECT_EQ(rank_numeric(controllability_matrix(a.to_dense(), DenseMatrix::column(b))), 8u);
}

TEST(Controllability, RejectsMismatchedShapes) {
  EXPECT_THROW(controllability_matrix(DenseMatrix(2, 3), DenseMatrix(2, 1)), InvalidInput);
  EXPECT_THROW(controllability_matrix(DenseMatrix::identity(2), DenseMatrix(3, 1)), InvalidInput);
  EXPECT_THROW(controllability_matrix(RationalMatrix::identity(2), RationalMatrix(3, 1)),
               InvalidInput);
}

TEST(RankExact, SmallExamples) {
  EXPECT_EQ(rank_exact(RationalMatrix(3, 3)), 0u);
  EXPECT_EQ(rank_exact(RationalMatrix::identity(3)), 3u);
  EXPECT_EQ(rank_exact(testing::worked_example_v()), 8u);
  EXPECT_EQ(rank_exact(RationalMatrix(0, 4)), 0u);
}

TEST(RankExact, MatchesNaiveEliminationOnRandomMatrices) {
  testing::Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const auto rows = static_cast<std::size_t>(testing::uniform_int(rng, 1, 7));
    const auto inner = static_cast<std::size_t>(testing::uniform_int(rng, 1, 7));
    const auto cols = static_cast<std::size_t>(testing::uniform_int(rng, 1, 7));
    std::vector<Rational> x;
    std::vector<Rational> y;
    for (std::size_t i = 0; i < rows * inner; ++i) {
      x.emplace_back(testing::uniform_int(rng, -3, 3), testing::uniform_int(rng, 1, 4));
    }
    for (std::size_t i = 0; i < inner * cols; ++i) {
      y.emplace_back(testing::uniform_int(rng, -3, 3), testing::uniform_int(rng, 1, 4));
    }
    const auto m = testing::naive_product(RationalMatrix(rows, inner, x),
                                          RationalMatrix(inner, cols, y));
    ASSERT_EQ(rank_exact(m), naive_rank(m)) << "trial " << t;
  }
}

TEST(RankNumeric, Identity) { EXPECT_EQ(rank_numeric(DenseMatrix::identity(2)), 2u); }

TEST(RankNumeric, NearlySingularUsesDefaultThreshold) {
  const double d = 1.0 + 1e-15;
  // Singular values of the symmetric matrix ((1,1),(1,d)) from its trace and
  // determinant, in extended precision. d - 1 is exact in double.
  const long double det = static_cast<long double>(d - 1.0);
  const long double tr = 1.0L + static_cast<long double>(d);
  const long double big = (tr + std::sqrt(tr * tr - 4.0L * det)) / 2.0L;
  const long double small = det / big;
  const long double threshold = 2.0L * big * static_cast<long double>(DBL_EPSILON);
  ASSERT_LT(small, threshold);
  ASSERT_GT(small, 0.0L);
  const std::vector<double> m{1, 1, 1, d};
  EXPECT_EQ(rank_numeric(DenseMatrix(2, 2, m)), 1u);
}

TEST(RankNumeric, AbsoluteToleranceOverrides) {
  const std::vector<double> d{1.0, 1e-6};
  const DenseMatrix m = DenseMatrix::diagonal(d);
  EXPECT_EQ(rank_numeric(m, RankTolerance{1e-5}), 1u);
  EXPECT_EQ(rank_numeric(m, RankTolerance{1e-7}), 2u);
  EXPECT_EQ(rank_numeric(DenseMatrix(3, 2)), 0u);
}

TEST(RankNumeric, AgreesWithExactOnModerateMatrices) {
  testing::Rng rng(17);
  for (int t = 0; t < 200; ++t) {
    const auto rows = static_cast<std::size_t>(testing::uniform_int(rng, 1, 12));
    const auto cols = static_cast<std::size_t>(testing::uniform_int(rng, 1, 12));
    const auto inner = static_cast<std::size_t>(testing::uniform_int(rng, 1, 12));
    // Factors with entries <= 9 in magnitude keep products within 10^3.
    std::vector<Rational> x;
    std::vector<Rational> y;
    for (std::size_t i = 0; i < rows * inner; ++i) x.emplace_back(testing::uniform_int(rng, -9, 9));
    for (std::size_t i = 0; i < inner * cols; ++i) y.emplace_back(testing::uniform_int(rng, -9, 9));
    const auto m = testing::naive_product(RationalMatrix(rows, inner, x),
                                          RationalMatrix(inner, cols, y));
    ASSERT_EQ(rank_numeric(m.to_dense()), rank_exact(m)) << "trial " << t;
  }
  for (int t = 0; t < 100; ++t) {
    const auto n = static_cast<std::size_t>(testing::uniform_int(rng, 1, 12));
    std::vector<Rational> x;
    for (std::size_t i = 0; i < n * n; ++i) {
      x.emplace_back(testing::uniform_int(rng, -1000, 1000), testing::uniform_int(rng, 1, 7));
    }
    const RationalMatrix m(n, n, x);
    ASSERT_EQ(rank_numeric(m.to_dense()), rank_exact(m)) << "trial " << t;
  }
}

TEST(Nullspace, BasisVectorsAreAnnihilated) {
  testing::Rng rng(23);
  for (int t = 0; t < 50; ++t) {
    const auto rows = static_cast<std::size_t>(testing::uniform_int(rng, 1, 5));
    const auto cols = static_cast<std::size_t>(testing::uniform_int(rng, 1, 6));
    std::vector<Rational> x;
    for (std::size_t i = 0; i < rows * cols; ++i) x.emplace_back(testing::uniform_int(rng, -2, 2));
    const RationalMatrix m(rows, cols, x);
    const auto basis = nullspace_exact(m);
    ASSERT_EQ(basis.size(), cols - naive_rank(m));
    for (const auto& v : basis) EXPECT_EQ(m * std::span<const Rational>(v), RationalVector(rows));
  }
}

// --- Jordan structure ---------------------------------------------------

JordanSpec single_block_identity() {
  return JordanSpec({Rational(5)}, {2}, RationalMatrix::identity(2));
}

TEST(CoveredCount, SingleBlockExamples) {
  const auto j = single_block_identity();
  const RationalVector b_last{0, 1};
  const RationalVector b_first{1, 0};
  EXPECT_EQ(covered_count(j, b_last), 2u);
  EXPECT_EQ(covered_count(j, b_first), 1u);
  EXPECT_EQ(covered_count(j, RationalVector(2)), 0u);
  // Upper-shift convention: C(J, e_2) has rank 2, C(J, e_1) rank 1.
  EXPECT_EQ(rank_exact(controllability_matrix(j.system_matrix(), RationalMatrix(2, 1, b_last))),
            2u);
  EXPECT_EQ(rank_exact(controllability_matrix(j.system_matrix(), RationalMatrix(2, 1, b_first))),
            1u);
}

TEST(JordanSpec, RejectsBrokenStructure) {
  EXPECT_THROW(JordanSpec({Rational(1)}, {3}, RationalMatrix::identity(2)), InvalidInput);
  EXPECT_THROW(JordanSpec({Rational(1), Rational(1)}, {1, 1}, RationalMatrix::identity(2)),
               InvalidInput);
  EXPECT_THROW(JordanSpec({Rational(1), Rational(2)}, {2, 0}, RationalMatrix::identity(2)),
               InvalidInput);
  EXPECT_THROW(JordanSpec({Rational(1)}, {2}, RationalMatrix(2, 2)), InvalidInput);
}

TEST(JordanSpec, SystemMatrixConjugatesToJordanForm) {
  testing::Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto spec = testing::random_jordan_spec(rng, 5);
    const auto t_inv = spec.t_inverse();
    EXPECT_EQ(testing::naive_product(t_inv, spec.system_matrix()),
              testing::naive_product(spec.jordan_form(), t_inv));
  }
}

// <t(i,j), b> = (T^{-1} b)_{(i,j)}, so b = T c makes the coefficients c.
std::size_t covered_from_coefficients(const JordanSpec& spec, const RationalVector& c) {
  std::size_t total = 0;
  std::size_t offset = 0;
  for (auto d : spec.block_sizes()) {
    std::size_t z = 0;
    for (std::size_t j = 0; j < d; ++j) {
      if (c[offset + j] != 0) z = j + 1;
    }
    total += z;
    offset += d;
  }
  return total;
}

TEST(CoveredCount, MatchesExactRankOnRandomJordanInstances) {
  testing::Rng rng(2024);
  for (int t = 0; t < 150; ++t) {
    const auto n = static_cast<std::size_t>(testing::uniform_int(rng, 1, 6));
    const auto spec = testing::random_jordan_spec(rng, n);
    const auto a = spec.system_matrix();
    const auto t_mat = spec.t_inverse().inverse();

    const RationalVector c = testing::random_sparse_vector(rng, n, 50);
    const RationalVector b = t_mat * std::span<const Rational>(c);
    const std::size_t expected = covered_from_coefficients(spec, c);
    EXPECT_EQ(covered_count(spec, b), expected) << "trial " << t;
    EXPECT_EQ(naive_rank(naive_krylov(a, b)), expected) << "trial " << t;
    EXPECT_EQ(rank_exact(controllability_matrix(a, RationalMatrix(n, 1, b))), expected);

    const RationalVector b2 = testing::random_sparse_vector(rng, n, 60);
    EXPECT_EQ(covered_count(spec, b2), rank_exact(controllability_matrix(a, RationalMatrix(n, 1, b2))))
        << "trial " << t;
  }
}

}  // namespace
}  // namespace minctrl
