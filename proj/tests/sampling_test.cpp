#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "symchar/partitions.hpp"
#include "symchar/sampling.hpp"
#include "symchar/stats.hpp"

using namespace symchar;

TEST(SplitMix64, ReferenceOutputs) {
  SplitMix64 rng(0);
  EXPECT_EQ(rng(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(rng(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(rng(), 0x06c45d188009454fULL);
}

TEST(SplitMix64, SubstreamsDiffer) {
  auto a = SplitMix64::substream(7, 0);
  auto b = SplitMix64::substream(7, 1);
  auto c = SplitMix64::substream(8, 0);
  const auto x = a(), y = b(), z = c();
  EXPECT_NE(x, y);
  EXPECT_NE(x, z);
}

TEST(UniformBelow, StaysInRangeAndIsUnbiased) {
  SplitMix64 rng(1);
  std::vector<double> counts(7, 0.0);
  for (int i = 0; i < 70000; ++i) {
    const auto v = uniform_below(std::uint64_t{7}, rng);
    ASSERT_LT(v, 7u);
    counts[v] += 1;
  }
  const std::vector<double> expected(7, 10000.0);
  EXPECT_LT(chi_square_statistic(counts, expected), chi_square_critical(6, 0.999));
  EXPECT_THROW(uniform_below(std::uint64_t{0}, rng), ValidationError);
}

TEST(UniformBelow, BigBound) {
  SplitMix64 rng(2);
  const BigInt bound = (BigInt(1) << 130) + 12345;
  bool high_seen = false;
  for (int i = 0; i < 200; ++i) {
    const BigInt v = uniform_below(bound, rng);
    ASSERT_GE(v, 0);
    ASSERT_LT(v, bound);
    high_seen |= v > (BigInt(1) << 129);
  }
  EXPECT_TRUE(high_seen);
  EXPECT_EQ(uniform_below(BigInt(1), rng), 0);
}

TEST(UniformPartition, TrivialSize) {
  SplitMix64 rng(3);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(uniform_partition(1, rng), Partition({1}));
  EXPECT_EQ(uniform_partition(0, rng), Partition());
}

TEST(UniformPartition, ChiSquareAtFour) {
  SplitMix64 rng(4);
  const BoundedPartitionCounts<BigInt> counts(4);
  const auto all = enumerate_partitions(4);
  std::map<Partition, double> seen;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) seen[uniform_partition(4, counts, rng)] += 1;
  std::vector<double> obs, exp;
  for (const auto& p : all) {
    obs.push_back(seen[p]);
    exp.push_back(draws / 5.0);
  }
  EXPECT_LT(chi_square_statistic(obs, exp), chi_square_critical(4, 0.999));
}

TEST(UniformPartition, CoversAllPartitionsOfTen) {
  SplitMix64 rng(5);
  const BoundedPartitionCounts<BigInt> counts(10);
  std::set<Partition> seen;
  for (int i = 0; i < 100000; ++i) seen.insert(uniform_partition(10, counts, rng));
  EXPECT_EQ(seen.size(), 42u);
}

TEST(RandomCycleType, SizeOne) {
  SplitMix64 rng(6);
  EXPECT_EQ(random_cycle_type(1, rng), Partition({1}));
  EXPECT_THROW(random_cycle_type(0, rng), ValidationError);
}

TEST(RandomCycleType, ChiSquareAtThree) {
  SplitMix64 rng(7);
  std::map<Partition, double> seen;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) seen[random_cycle_type(3, rng)] += 1;
  const std::vector<double> obs{seen[Partition({3})], seen[Partition({2, 1})], seen[Partition({1, 1, 1})]};
  const std::vector<double> exp{draws / 3.0, draws / 2.0, draws / 6.0};
  EXPECT_LT(chi_square_statistic(obs, exp), chi_square_critical(2, 0.999));
}

TEST(RandomCycleType, FrequenciesMatchInverseCentralizerOrders) {
  SplitMix64 rng(8);
  const int draws = 100000;
  for (int n = 1; n <= 6; ++n) {
    std::map<Partition, double> seen;
    for (int i = 0; i < draws; ++i) seen[random_cycle_type(n, rng)] += 1;
    for (const auto& mu : enumerate_partitions(n)) {
      const double p = 1.0 / centralizer_order(mu).convert_to<double>();
      const double sigma = std::sqrt(p * (1 - p) / draws);
      EXPECT_LE(std::abs(seen[mu] / draws - p), 5 * sigma + 1e-12) << mu.to_string();
    }
  }
}

TEST(RandomCycleCount, SameStreamAsCycleType) {
  SplitMix64 a(9), b(9);
  for (int i = 0; i < 1000; ++i) EXPECT_EQ(static_cast<std::size_t>(random_cycle_count(50, a)), random_cycle_type(50, b).length());
}

TEST(Blocks, ResultIndependentOfThreadCount) {
  auto body = [](SplitMix64& rng, std::uint64_t first, std::uint64_t last) {
    std::vector<std::uint64_t> v;
    for (auto i = first; i < last; ++i) v.push_back(rng());
    return v;
  };
  const auto one = run_blocks(10000, 11, 1, body);
  const auto four = run_blocks(10000, 11, 4, body);
  EXPECT_EQ(one, four);
  ASSERT_EQ(one.size(), 3u);
  EXPECT_EQ(one.back().size(), 10000u - 2 * kSamplesPerBlock);
}

TEST(EstimateProportion, StdErrorAndErrors) {
  const auto s = estimate_proportion(20000, 12, 2, [](SplitMix64& rng) { return rng() % 4 == 0; });
  EXPECT_NEAR(s.estimate, 0.25, 5 * std::sqrt(0.25 * 0.75 / 20000));
  EXPECT_DOUBLE_EQ(s.std_error, std::sqrt(s.estimate * (1 - s.estimate) / 20000));
  EXPECT_EQ(s.seed, 12u);
  EXPECT_THROW(estimate_proportion(0, 1, 1, [](SplitMix64&) { return true; }), ValidationError);
}

TEST(Stats, KsDistanceOfUniformGrid) {
  std::vector<double> v;
  for (int i = 0; i < 100; ++i) v.push_back((i + 0.5) / 100.0);
  EXPECT_NEAR(ks_distance(v, [](double x) { return x; }), 0.005, 1e-12);
  // Ties: all mass at 0.5 against U(0,1).
  EXPECT_NEAR(ks_distance(std::vector<double>(10, 0.5), [](double x) { return x; }), 0.5, 1e-12);
}

TEST(Stats, ChiSquareCriticalValues) {
  // Standard table values at 99.9%.
  EXPECT_NEAR(chi_square_critical(4, 0.999), 18.467, 1e-3);
  EXPECT_NEAR(chi_square_critical(10, 0.999), 29.588, 1e-3);
  EXPECT_NEAR(chi_square_critical(41, 0.999), 74.745, 1e-3);
}
