#include <gtest/gtest.h>

#include "oracles.hpp"
#include "symchar/partitions.hpp"

using namespace symchar;

namespace {

std::vector<std::vector<int>> as_vectors(const std::vector<Partition>& ps) {
  std::vector<std::vector<int>> out;
  for (const auto& p : ps) out.push_back(p.vec());
  return out;
}

}  // namespace

TEST(Partition, RejectsMalformedParts) {
  EXPECT_THROW(Partition({1, 2}), ValidationError);
  EXPECT_THROW(Partition({2, 0}), ValidationError);
  EXPECT_THROW(Partition({-1}), ValidationError);
  EXPECT_EQ(Partition().n(), 0);
  EXPECT_EQ(Partition({3, 1, 1}).n(), 5);
}

TEST(Partition, DashJoinedRoundTrip) {
  EXPECT_EQ(Partition::parse("3-1-1"), Partition({3, 1, 1}));
  EXPECT_EQ(Partition({4, 2}).to_string(), "4-2");
  EXPECT_EQ(Partition::parse(""), Partition());
  EXPECT_THROW(Partition::parse("3--1"), ValidationError);
  EXPECT_THROW(Partition::parse("1-3"), ValidationError);
  EXPECT_THROW(Partition::parse("a"), ValidationError);
}

TEST(Enumerate, SmallCases) {
  const auto zero = enumerate_partitions(0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero[0].empty());

  const std::vector<std::vector<int>> four{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  EXPECT_EQ(as_vectors(enumerate_partitions(4)), four);
  EXPECT_EQ(enumerate_partitions(10).size(), 42u);
}

TEST(Enumerate, MatchesRecursiveOracle) {
  for (int n = 0; n <= 18; ++n) EXPECT_EQ(as_vectors(enumerate_partitions(n)), oracle::partitions(n)) << n;
}

TEST(Enumerate, LengthEqualsCountUpTo60) {
  for (int n = 0; n <= 60; ++n) EXPECT_EQ(BigInt(enumerate_partitions(n).size()), partition_count(n)) << n;
}

TEST(Enumerate, CapExceeded) {
  EXPECT_THROW(enumerate_partitions(30, 1000), CapExceeded);
  EXPECT_NO_THROW(enumerate_partitions(10, 42));
  EXPECT_THROW(enumerate_partitions(100000), CapExceeded);
}

TEST(PartitionCount, Values) {
  EXPECT_EQ(partition_count(0), 1);
  EXPECT_EQ(partition_count(5), 7);
  EXPECT_EQ(partition_count(5), BigInt(oracle::partitions(5).size()));
}

TEST(PartitionCount, PentagonalAgreesWithLargestPartTable) {
  const BoundedPartitionCounts<BigInt> counts(100);
  for (int n = 0; n <= 100; ++n) EXPECT_EQ(partition_count(n), counts.total(n)) << n;
  EXPECT_EQ(partition_count(100), BigInt("190569292"));
}

TEST(PartitionCount, AtMost) {
  EXPECT_TRUE(partition_count_at_most(10, 42));
  EXPECT_FALSE(partition_count_at_most(10, 41));
  EXPECT_FALSE(partition_count_at_most(1 << 20, 1000));
}

TEST(BoundedCounts, FixedWidthOverflowIsReported) {
  EXPECT_THROW(BoundedPartitionCounts<std::uint64_t>(500), CapExceeded);
  EXPECT_NO_THROW(BoundedPartitionCounts<std::uint64_t>(300));
}

TEST(Centralizer, Examples) {
  EXPECT_EQ(centralizer_order(Partition({1, 1, 1})), 6);
  EXPECT_EQ(centralizer_order(Partition({2, 1})), 2);
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(centralizer_order(Partition({n})), n);
}

TEST(Centralizer, MatchesBruteForceSearch) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& mu : enumerate_partitions(n)) {
      EXPECT_EQ(centralizer_order(mu), oracle::centralizer_by_search(oracle::with_cycle_type(mu.vec()))) << mu.to_string();
    }
  }
}

TEST(ClassSize, ExamplesAndBruteForce) {
  EXPECT_EQ(class_size(Partition({1, 1, 1})), 1);
  EXPECT_EQ(class_size(Partition({2, 1})), 3);
  EXPECT_EQ(class_size(Partition({3})), 2);
  for (int n = 1; n <= 7; ++n) {
    std::map<std::vector<int>, long long> tally;
    for (const auto& p : oracle::all_permutations(n)) ++tally[oracle::cycle_lengths(p)];
    for (const auto& mu : enumerate_partitions(n)) EXPECT_EQ(class_size(mu), tally[mu.vec()]) << mu.to_string();
  }
}

TEST(ClassSize, ClassesPartitionTheGroup) {
  for (int n = 1; n <= 30; ++n) {
    BigInt total = 0;
    Rational inverse_sum = 0;
    for (const auto& mu : enumerate_partitions(n)) {
      total += class_size(mu);
      inverse_sum += Rational(BigInt(1), centralizer_order(mu));
    }
    EXPECT_EQ(total, factorial(static_cast<unsigned>(n))) << n;
    EXPECT_EQ(inverse_sum, 1) << n;
  }
}

TEST(Conjugate, Examples) {
  EXPECT_EQ(conjugate(Partition({3})), Partition({1, 1, 1}));
  EXPECT_EQ(conjugate(Partition({2, 1})), Partition({2, 1}));
  EXPECT_EQ(conjugate(Partition({4, 2, 1})), Partition({3, 2, 1, 1}));
  EXPECT_EQ(conjugate(Partition()), Partition());
}

TEST(Conjugate, IsAnInvolution) {
  for (int n = 0; n <= 15; ++n) {
    for (const auto& l : enumerate_partitions(n)) EXPECT_EQ(conjugate(conjugate(l)), l);
  }
}

TEST(Rank, Examples) {
  EXPECT_EQ(unrank({4, 0}), Partition({4}));
  EXPECT_EQ(rank(Partition({1, 1, 1, 1})).rank, 4);
  EXPECT_EQ(rank(Partition()).rank, 0);
  EXPECT_EQ(unrank({0, 0}), Partition());
}

TEST(Rank, OutOfBounds) {
  EXPECT_THROW(unrank({4, 5}), ValidationError);
  EXPECT_THROW(unrank({4, -1}), ValidationError);
  EXPECT_THROW(unrank({-1, 0}), ValidationError);
}

TEST(Rank, PositionInEnumerationAndRoundTrip) {
  for (int n = 0; n <= 20; ++n) {
    const auto all = enumerate_partitions(n);
    for (std::size_t i = 0; i < all.size(); ++i) {
      const PartitionIndex idx{n, BigInt(i)};
      ASSERT_EQ(unrank(idx), all[i]);
      ASSERT_EQ(rank(all[i]), idx);
    }
  }
}

TEST(Rank, CanonicalOrderIsDescendingLex) {
  const auto all = enumerate_partitions(12);
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_TRUE(canonical_before(all[i - 1], all[i]));
}
