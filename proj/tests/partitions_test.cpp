#include "qcount/partitions.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "qcount/errors.hpp"

namespace {

using qcount::BoxBound;
using qcount::Partition;
using qcount::PartitionStream;

std::vector<Partition> collect(BoxBound box) {
  PartitionStream stream(box);
  std::vector<Partition> out;
  while (auto p = stream.next()) out.push_back(*p);
  return out;
}

mpz_class binom(unsigned n, unsigned k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

TEST(Partition, ConstructionAndNormalization) {
  Partition lambda{3, 2, 2};
  EXPECT_EQ(lambda.num_parts(), 3u);
  EXPECT_EQ(lambda.weight(), 7);
  EXPECT_EQ(lambda.part(1), 3);
  EXPECT_EQ(lambda.part(3), 2);
  EXPECT_EQ(lambda.part(4), 0);
  EXPECT_EQ(Partition({3, 2, 0, 0}).num_parts(), 2u);
  EXPECT_TRUE(Partition{}.empty());
  EXPECT_EQ(Partition{}.weight(), 0);
}

TEST(Partition, RejectsInvalidPartLists) {
  EXPECT_THROW(Partition({2, 3}), qcount::Error);
  EXPECT_THROW(Partition({3, -1}), qcount::Error);
  EXPECT_THROW(Partition({3, 0, 2}), qcount::Error);
}

TEST(Partition, TextForms) {
  EXPECT_EQ(Partition({3, 2, 2}).to_string(), "(3,2,2)");
  EXPECT_EQ(Partition{}.to_string(), "()");
  EXPECT_EQ(Partition({5}).to_string(), "(5)");
}

TEST(Partition, BoxMembership) {
  BoxBound box{3, 4};
  EXPECT_TRUE(fits_in_box(Partition({3, 2, 2}), box));
  EXPECT_TRUE(fits_in_box(Partition{}, box));
  EXPECT_TRUE(fits_in_box(Partition({4, 4, 4}), box));
  EXPECT_FALSE(fits_in_box(Partition({5}), box));
  EXPECT_FALSE(fits_in_box(Partition({1, 1, 1, 1}), box));
}

TEST(Partition, ConjugateExamples) {
  EXPECT_EQ(conjugate(Partition({3, 2, 2})), Partition({3, 3, 1}));
  EXPECT_EQ(conjugate(Partition({4})), Partition({1, 1, 1, 1}));
  EXPECT_EQ(conjugate(Partition{}), Partition{});
}

TEST(Partition, ConjugateIsAnInvolution) {
  for (const Partition& lambda : collect(BoxBound{4, 5})) {
    EXPECT_EQ(conjugate(conjugate(lambda)), lambda);
    EXPECT_EQ(conjugate(lambda).weight(), lambda.weight());
  }
}

TEST(Partition, ComplementExamples) {
  BoxBound box{3, 4};
  EXPECT_EQ(complement_in_box(Partition({3, 2, 2}), box), Partition({2, 2, 1}));
  EXPECT_EQ(complement_in_box(Partition{}, box), Partition({4, 4, 4}));
  EXPECT_EQ(complement_in_box(Partition({4, 4, 4}), box), Partition{});
  EXPECT_THROW(complement_in_box(Partition({5}), box), qcount::Error);
}

TEST(Partition, ComplementIsAWeightReversingInvolution) {
  BoxBound box{3, 5};
  for (const Partition& lambda : collect(box)) {
    Partition mu = complement_in_box(lambda, box);
    EXPECT_TRUE(fits_in_box(mu, box));
    EXPECT_EQ(complement_in_box(mu, box), lambda);
    EXPECT_EQ(lambda.weight() + mu.weight(), 15);
  }
}

TEST(PartitionStream, TwoByThreeOrderIsFrozen) {
  std::vector<std::string> expected{"()",    "(1)",   "(1,1)", "(2)",   "(2,1)",
                                    "(2,2)", "(3)",   "(3,1)", "(3,2)", "(3,3)"};
  std::vector<std::string> got;
  for (const Partition& lambda : collect(BoxBound{2, 3})) {
    got.push_back(lambda.to_string());
  }
  EXPECT_EQ(got, expected);
}

TEST(PartitionStream, DegenerateBoxes) {
  auto none_wide = collect(BoxBound{0, 7});
  ASSERT_EQ(none_wide.size(), 1u);
  EXPECT_TRUE(none_wide.front().empty());

  auto none_tall = collect(BoxBound{7, 0});
  ASSERT_EQ(none_tall.size(), 1u);
  EXPECT_TRUE(none_tall.front().empty());

  std::vector<std::string> got;
  for (const Partition& lambda : collect(BoxBound{1, 3})) {
    got.push_back(lambda.to_string());
  }
  EXPECT_EQ(got, (std::vector<std::string>{"()", "(1)", "(2)", "(3)"}));
}

TEST(PartitionStream, CountsMatchBinomials) {
  // Partitions in a k x (n-k) box biject with k-subsets of an n-set.
  for (int n = 0; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) {
      auto all = collect(BoxBound{k, n - k});
      EXPECT_EQ(mpz_class(static_cast<long>(all.size())),
                binom(static_cast<unsigned>(n), static_cast<unsigned>(k)))
          << "n=" << n << " k=" << k;
    }
  }
}

TEST(PartitionStream, NoDuplicatesAndAscendingPaddedLex) {
  BoxBound box{3, 4};
  auto all = collect(box);
  std::vector<std::vector<int>> padded;
  for (const Partition& lambda : all) {
    std::vector<int> row;
    for (std::size_t i = 1; i <= 3; ++i) row.push_back(lambda.part(i));
    padded.push_back(row);
  }
  EXPECT_TRUE(std::is_sorted(padded.begin(), padded.end()));
  EXPECT_EQ(std::adjacent_find(padded.begin(), padded.end()), padded.end());
}

TEST(CountPartitions, SmallExactValues) {
  EXPECT_EQ(qcount::count_partitions(0, 2, 3), 1);
  EXPECT_EQ(qcount::count_partitions(3, 2, 3), 2);  // (3), (2,1)
  EXPECT_EQ(qcount::count_partitions(7, 3, 4), 4);  // (4,3), (4,2,1), (3,3,1), (3,2,2)
  EXPECT_EQ(qcount::count_partitions(1, 0, 5), 0);
  EXPECT_EQ(qcount::count_partitions(0, 0, 0), 1);
  EXPECT_EQ(qcount::count_partitions(-1, 2, 2), 0);
}

TEST(CountPartitions, AgreesWithEnumeration) {
  for (int rows = 0; rows <= 4; ++rows) {
    for (int cols = 0; cols <= 5; ++cols) {
      std::map<long, long> census;
      for (const Partition& lambda : collect(BoxBound{rows, cols})) {
        ++census[lambda.weight()];
      }
      for (long r = 0; r <= static_cast<long>(rows) * cols; ++r) {
        EXPECT_EQ(qcount::count_partitions(r, rows, cols), census[r])
            << "rows=" << rows << " cols=" << cols << " r=" << r;
      }
    }
  }
}

}  // namespace
