#include "qcount/ffield.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "qcount/errors.hpp"
#include "oracles.hpp"

namespace {

using qcount::FMatrix;
using qcount::PrimeField;
using qcount::RrefResult;

FMatrix random_matrix(const PrimeField& field, int rows, int cols, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> entry(0, field.p() - 1);
  std::vector<std::uint32_t> entries(static_cast<std::size_t>(rows) * cols);
  for (auto& e : entries) e = entry(rng);
  return FMatrix(field, rows, cols, std::move(entries));
}

FMatrix random_invertible(const PrimeField& field, int n, std::mt19937& rng) {
  while (true) {
    FMatrix m = random_matrix(field, n, n, rng);
    if (qcount::rank_of(m) == n) return m;
  }
}

TEST(PrimeField, AcceptsPrimesRejectsTheRest) {
  EXPECT_NO_THROW(PrimeField(2));
  EXPECT_NO_THROW(PrimeField(3));
  EXPECT_NO_THROW(PrimeField(65521));  // largest prime below 2^16
  EXPECT_THROW(PrimeField(0), qcount::DomainViolation);
  EXPECT_THROW(PrimeField(1), qcount::DomainViolation);
  EXPECT_THROW(PrimeField(4), qcount::DomainViolation);
  EXPECT_THROW(PrimeField(65536), qcount::DomainViolation);
  EXPECT_THROW(PrimeField(65535), qcount::DomainViolation);  // 3*5*17*257
}

TEST(PrimeField, ArithmeticExamples) {
  PrimeField f7(7);
  EXPECT_EQ(f7.add(5, 4), 2u);
  EXPECT_EQ(f7.sub(2, 5), 4u);
  EXPECT_EQ(f7.neg(3), 4u);
  EXPECT_EQ(f7.neg(0), 0u);
  EXPECT_EQ(f7.mul(5, 4), 6u);
  PrimeField big(65521);
  EXPECT_EQ(big.mul(65520, 65520), 1u);  // (-1)^2
}

TEST(PrimeField, InverseExamplesAndErrors) {
  PrimeField f7(7);
  EXPECT_EQ(field_inv(f7, 3), 5u);
  EXPECT_EQ(field_inv(f7, 1), 1u);
  EXPECT_THROW(field_inv(f7, 0), qcount::DivisionByZero);
  EXPECT_THROW(field_inv(f7, 7), qcount::DomainViolation);
}

TEST(PrimeField, InverseIsExhaustivelyCorrect) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 251u}) {
    PrimeField f(p);
    for (std::uint32_t x = 1; x < p; ++x) {
      EXPECT_EQ(f.mul(x, field_inv(f, x)), 1u) << "p=" << p << " x=" << x;
    }
  }
}

TEST(FMatrix, ConstructionAndValidation) {
  PrimeField f3(3);
  FMatrix m(f3, 2, 3, {0, 1, 2, 2, 1, 0});
  EXPECT_EQ(m.rows(), 2);
  EXPECT_EQ(m.cols(), 3);
  EXPECT_EQ(m.at(0, 2), 2u);
  EXPECT_EQ(m.at(1, 0), 2u);
  EXPECT_THROW(FMatrix(f3, 2, 2, {0, 1, 2}), qcount::ShapeMismatch);
  EXPECT_THROW(FMatrix(f3, 1, 2, {0, 3}), qcount::DomainViolation);
  EXPECT_EQ(FMatrix::zero(f3, 2, 2), FMatrix(f3, 2, 2, {0, 0, 0, 0}));
  EXPECT_EQ(FMatrix::identity(f3, 2), FMatrix(f3, 2, 2, {1, 0, 0, 1}));
}

TEST(FMatrix, TextForm) {
  PrimeField f3(3);
  FMatrix m(f3, 3, 7,
            {0, 1, 1, 0, 0, 1, 2,
             0, 0, 0, 1, 0, 2, 0,
             0, 0, 0, 0, 1, 0, 1});
  EXPECT_EQ(m.to_string(), "0 1 1 0 0 1 2; 0 0 0 1 0 2 0; 0 0 0 0 1 0 1");
  EXPECT_EQ(FMatrix::zero(f3, 0, 4).to_string(), "");
}

TEST(FMatrix, MultiplyAndStack) {
  PrimeField f5(5);
  FMatrix a(f5, 2, 2, {1, 2, 3, 4});
  FMatrix b(f5, 2, 2, {0, 1, 1, 0});
  EXPECT_EQ(multiply(a, b), FMatrix(f5, 2, 2, {2, 1, 4, 3}));
  EXPECT_EQ(multiply(a, FMatrix::identity(f5, 2)), a);
  EXPECT_EQ(stack(a, b), FMatrix(f5, 4, 2, {1, 2, 3, 4, 0, 1, 1, 0}));
  EXPECT_THROW(multiply(a, FMatrix::zero(f5, 3, 2)), qcount::ShapeMismatch);
  EXPECT_THROW(stack(a, FMatrix::zero(f5, 1, 3)), qcount::ShapeMismatch);
  EXPECT_THROW(multiply(a, FMatrix::zero(PrimeField(7), 2, 2)), qcount::DomainViolation);
}

TEST(Rref, HandWorkedReduction) {
  PrimeField f5(5);
  // (2 4; 1 3) -> scale row 1 by inv(2)=3 -> (1 2; 1 3) -> clear -> (1 2; 0 1)
  // -> clear above -> (1 0; 0 1).
  FMatrix m(f5, 2, 2, {2, 4, 1, 3});
  RrefResult r = rref_reduce(m);
  EXPECT_EQ(r.matrix, FMatrix::identity(f5, 2));
  EXPECT_EQ(r.rank, 2);
  EXPECT_EQ(r.pivots, (std::vector<int>{1, 2}));
}

TEST(Rref, SingularExample) {
  PrimeField f2(2);
  FMatrix m(f2, 3, 3, {1, 1, 0, 1, 1, 0, 0, 0, 1});
  RrefResult r = rref_reduce(m);
  EXPECT_EQ(r.rank, 2);
  EXPECT_EQ(r.pivots, (std::vector<int>{1, 3}));
  EXPECT_EQ(r.matrix, FMatrix(f2, 3, 3, {1, 1, 0, 0, 0, 1, 0, 0, 0}));
  EXPECT_TRUE(is_rref(r.matrix));
}

TEST(Rref, ReferenceMatrixIsAFixedPoint) {
  PrimeField f3(3);
  FMatrix m(f3, 3, 7,
            {0, 1, 1, 0, 0, 1, 2,
             0, 0, 0, 1, 0, 2, 0,
             0, 0, 0, 0, 1, 0, 1});
  EXPECT_TRUE(is_rref(m));
  RrefResult r = rref_reduce(m);
  EXPECT_EQ(r.matrix, m);
  EXPECT_EQ(r.rank, 3);
  EXPECT_EQ(r.pivots, (std::vector<int>{2, 4, 5}));
}

TEST(Rref, RecognizerRejectsNearMisses) {
  PrimeField f3(3);
  EXPECT_FALSE(is_rref(FMatrix(f3, 2, 2, {2, 0, 0, 1})));  // leading entry not 1
  EXPECT_FALSE(is_rref(FMatrix(f3, 2, 2, {1, 1, 0, 1})));  // pivot column not clear
  EXPECT_FALSE(is_rref(FMatrix(f3, 2, 2, {0, 1, 1, 0})));  // leads not increasing
  EXPECT_FALSE(is_rref(FMatrix(f3, 3, 2, {0, 0, 1, 0, 0, 1})));  // zero row on top
  EXPECT_TRUE(is_rref(FMatrix::zero(f3, 2, 3)));
  EXPECT_TRUE(is_rref(FMatrix(f3, 2, 3, {1, 0, 2, 0, 1, 1})));
}

TEST(Rref, IdempotentAndShapePreserving) {
  std::mt19937 rng(23);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    PrimeField f(p);
    for (int trial = 0; trial < 50; ++trial) {
      FMatrix m = random_matrix(f, 3, 5, rng);
      RrefResult r = rref_reduce(m);
      EXPECT_TRUE(is_rref(r.matrix));
      EXPECT_EQ(rref_reduce(r.matrix).matrix, r.matrix);
      EXPECT_EQ(static_cast<int>(r.pivots.size()), r.rank);
      for (std::size_t i = 0; i + 1 < r.pivots.size(); ++i) {
        EXPECT_LT(r.pivots[i], r.pivots[i + 1]);
      }
    }
  }
}

TEST(Rref, CanonicalFormIsARowSpaceInvariant) {
  std::mt19937 rng(29);
  for (std::uint32_t p : {2u, 5u}) {
    PrimeField f(p);
    for (int trial = 0; trial < 40; ++trial) {
      FMatrix m = random_matrix(f, 3, 4, rng);
      FMatrix l = random_invertible(f, 3, rng);
      EXPECT_EQ(rref_reduce(multiply(l, m)).matrix, rref_reduce(m).matrix);
    }
  }
}

TEST(Rref, RankCensusMatchesTheClosedForm) {
  // Tuples of k independent vectors in F_q^n number prod_i (q^n - q^i);
  // the census runs every tuple through rank_of.
  for (std::uint32_t q : {2u, 3u}) {
    PrimeField f(q);
    int n_max = q == 2 ? 4 : 3;
    for (int n = 0; n <= n_max; ++n) {
      for (int k = 0; k <= n; ++k) {
        mpz_class expected = 1;
        mpz_class qn;
        mpz_ui_pow_ui(qn.get_mpz_t(), q, static_cast<unsigned long>(n));
        for (int i = 0; i < k; ++i) {
          mpz_class qi;
          mpz_ui_pow_ui(qi.get_mpz_t(), q, static_cast<unsigned long>(i));
          expected *= qn - qi;
        }
        EXPECT_EQ(oracles::count_independent_tuples(n, k, f), expected)
            << "q=" << q << " n=" << n << " k=" << k;
      }
    }
  }
}

}  // namespace
