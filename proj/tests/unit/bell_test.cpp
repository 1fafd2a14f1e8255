#include <gtest/gtest.h>

#include <random>
#include <set>

#include "bellforge/bell.hpp"

using namespace bellforge;

namespace {

std::vector<Rational> random_args(std::mt19937_64& rng, std::size_t r) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 50);
  std::vector<Rational> xs;
  for (std::size_t i = 0; i < r; ++i) xs.emplace_back(BigInt(num(rng)), BigInt(den(rng)));
  return xs;
}

}  // namespace

TEST(Partitions, CountsMatchPartitionFunction) {
  const std::size_t p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135};
  for (unsigned r = 0; r <= 14; ++r) EXPECT_EQ(enumerate_partitions(r).size(), p[r]) << r;
}

TEST(Partitions, EachPartitionOnceWithCorrectWeight) {
  for (unsigned r = 1; r <= 12; ++r) {
    const auto parts = enumerate_partitions(r);
    const std::set<PartitionVector> unique(parts.begin(), parts.end());
    EXPECT_EQ(unique.size(), parts.size());
    for (const auto& p : parts) EXPECT_EQ(p.weight(), r);
  }
}

TEST(Partitions, StreamOrderLargestPartFirst) {
  PartitionStream s(3);
  EXPECT_EQ(s.next()->multiplicities, (std::vector<unsigned>{0, 0, 1}));
  EXPECT_EQ(s.next()->multiplicities, (std::vector<unsigned>{1, 1, 0}));
  EXPECT_EQ(s.next()->multiplicities, (std::vector<unsigned>{3, 0, 0}));
  EXPECT_FALSE(s.next().has_value());
  EXPECT_FALSE(s.next().has_value());
}

TEST(Partitions, ZeroHasOneEmptyPartition) {
  const auto parts = enumerate_partitions(0);
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_TRUE(parts[0].multiplicities.empty());
}

TEST(Bell, CoefficientsSumToBellNumbers) {
  const long bell_numbers[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147};
  for (unsigned r = 0; r < 10; ++r) {
    BigInt total = 0;
    for (const auto& p : enumerate_partitions(r)) total += partition_coefficient(p);
    EXPECT_EQ(total, bell_numbers[r]);
    const std::vector<Rational> ones(r, Rational(1));
    EXPECT_EQ(bell<Rational>(ones), Rational(bell_numbers[r]));
  }
}

TEST(Bell, LowOrderValues) {
  const std::vector<Rational> xs{2, 3, 5};
  const auto y = bell_recurrence<Rational>(xs);
  EXPECT_EQ(y[0], Rational(1));
  EXPECT_EQ(y[1], Rational(2));
  EXPECT_EQ(y[2], Rational(4 + 3));
  EXPECT_EQ(y[3], Rational(8 + 3 * 2 * 3 + 5));
  EXPECT_EQ(bell<Rational>(std::span<const Rational>{}), Rational(1));
}

TEST(Bell, PureFirstArgumentIsPower) {
  std::vector<Rational> xs(7, Rational(0));
  xs[0] = Rational(3, 2);
  EXPECT_EQ(bell<Rational>(xs), Rational(3, 2).pow(7));
}

TEST(Bell, FloatDomain) {
  const std::vector<double> xs{0.5, -0.25, 2.0, 1.0};
  const std::vector<Rational> qs{Rational(1, 2), Rational(-1, 4), 2, 1};
  EXPECT_NEAR(bell<double>(xs), bell<Rational>(qs).to_double(), 1e-14);
  EXPECT_NEAR(bell_partition_sum<double>(xs), bell<double>(xs), 1e-14);
}

TEST(BellProperty, PartitionSumEqualsRecurrence) {
  std::mt19937_64 rng(0xbe11);
  for (int sample = 0; sample < 20; ++sample) {
    const auto xs = random_args(rng, 12);
    for (std::size_t r = 0; r <= xs.size(); ++r) {
      const std::span<const Rational> sub(xs.data(), r);
      ASSERT_EQ(bell_partition_sum<Rational>(sub), bell<Rational>(sub)) << "sample " << sample << " r " << r;
    }
  }
}

TEST(BellProperty, ScalingAndSignLaws) {
  std::mt19937_64 rng(0x5ca1e);
  for (int sample = 0; sample < 20; ++sample) {
    const auto xs = random_args(rng, 10);
    const Rational a = random_args(rng, 1)[0];
    std::vector<Rational> scaled;
    std::vector<Rational> flipped;
    Rational ap = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      ap *= a;
      scaled.push_back(ap * xs[j]);
      flipped.push_back(j % 2 == 0 ? -xs[j] : xs[j]);
    }
    const auto y = bell_recurrence<Rational>(xs);
    const auto ys = bell_recurrence<Rational>(scaled);
    const auto yf = bell_recurrence<Rational>(flipped);
    for (std::size_t r = 0; r <= xs.size(); ++r) {
      EXPECT_EQ(ys[r], a.pow(static_cast<int>(r)) * y[r]);
      EXPECT_EQ(yf[r], Rational(minus_one_pow(static_cast<long>(r))) * y[r]);
    }
  }
}

TEST(BellProperty, GeneratingFunction) {
  std::mt19937_64 rng(99);
  for (int sample = 0; sample < 10; ++sample) {
    const auto xs = random_args(rng, 10);
    const auto report = bell_gen_fun_check(xs, 10);
    EXPECT_TRUE(report.passed) << report.lhs << " vs " << report.rhs;
    EXPECT_EQ(report.identity, "bell-egf");
  }
}
