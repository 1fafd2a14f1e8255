#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "bellforge/bernoulli.hpp"
#include "bellforge/combinatorics.hpp"
#include "bellforge/generating_functions.hpp"
#include "bellforge/series.hpp"
#include "bellforge/zeta_even.hpp"

using namespace bellforge;

namespace {

std::vector<Rational> random_args(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 6);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(BigInt(num(rng)), BigInt(den(rng)));
  return out;
}

}  // namespace

TEST(ExpTransform, ExponentialAndGeometric) {
  const std::vector<Rational> exp_args{1, 0, 0, 0, 0, 0};
  const auto e = exp_transform(Rational(0), exp_args);
  for (unsigned r = 0; r <= 6; ++r) EXPECT_EQ(e.coefficients[r], Rational(1) / Rational(factorial(r)));

  // log 1/(1-x) = sum x^m / m
  const std::vector<Rational> geo_args(8, Rational(1));
  const auto g = exp_transform(Rational(3, 2), geo_args);
  EXPECT_EQ(g.prefactor_exponent, Rational(3, 2));
  for (const auto& c : g.coefficients) EXPECT_EQ(c, Rational(1));
}

TEST(ExpTransformProperty, MatchesSeriesExp) {
  std::mt19937_64 rng(0x5eed0001);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t N = 1 + rng() % 9;
    const auto b = random_args(rng, N);
    std::vector<Rational> bs(N + 1);
    for (std::size_t m = 1; m <= N; ++m) bs[m] = b[m - 1];
    const auto expected = series::exp_recurrence(RationalSeries(bs), N);
    const auto got = exp_transform(Rational(0), b);
    ASSERT_EQ(got.coefficients.size(), N + 1);
    for (std::size_t r = 0; r <= N; ++r) ASSERT_EQ(got.coefficients[r], expected[r]);
  }
}

TEST(ExpTransformProperty, ScalingGivesPowers) {
  std::mt19937_64 rng(0x5eed0002);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t N = 2 + rng() % 7;
    const auto b = random_args(rng, N);
    const Rational alpha(BigInt(static_cast<long>(rng() % 7) - 3), BigInt(static_cast<long>(1 + rng() % 4)));
    std::vector<Rational> scaled;
    for (const auto& v : b) scaled.push_back(alpha * v);
    const auto base = exp_transform(Rational(0), b);
    const auto powered = series::pow(RationalSeries(base.coefficients), alpha, N);
    const auto direct = exp_transform(Rational(0), scaled);
    for (std::size_t r = 0; r <= N; ++r) ASSERT_EQ(direct.coefficients[r], powered[r]);
  }
}

TEST(Bernoulli, KnownValues) {
  const auto b = bernoulli(20);
  EXPECT_EQ(b[0], Rational(1));
  EXPECT_EQ(b[1], Rational(-1, 2));
  EXPECT_EQ(b[2], Rational(1, 6));
  EXPECT_EQ(b[3], Rational(0));
  EXPECT_EQ(b[4], Rational(-1, 30));
  EXPECT_EQ(b[12], Rational(-691, 2730));
  EXPECT_EQ(b[20], Rational(-174611, 330));
  EXPECT_EQ(bernoulli(0).size(), 1u);
}

TEST(Bernoulli, OraclesAgree) {
  const auto b = bernoulli(40);
  const auto reciprocal = bernoulli_reciprocal_oracle(40);
  const auto defining = bernoulli_defining_sum_oracle(40);
  for (std::size_t n = 0; n <= 40; ++n) {
    ASSERT_EQ(b[n], reciprocal[n]) << n;
    ASSERT_EQ(b[n], defining[n]) << n;
    if (n >= 3 && n % 2 == 1) {
      ASSERT_TRUE(b[n].is_zero());
    }
  }
}

TEST(Bernoulli, RamanujanLogSeries) {
  const auto report = ramanujan_log_check(12);
  EXPECT_TRUE(report.passed) << report.lhs << " vs " << report.rhs;
  // log(x/(e^x-1)) = -x/2 - x^2/24 + ...
  EXPECT_EQ(report.lhs.rfind("[0, -1/2, -1/24,", 0), 0u) << report.lhs;
  EXPECT_THROW(ramanujan_log_check(1), std::invalid_argument);
}

TEST(Bernoulli, BellAndRecurrenceChecks) {
  for (const auto& r : bernoulli_bell_check(24)) EXPECT_TRUE(r.passed) << r.identity;
  for (const auto& r : bernoulli_recurrence_check(24)) EXPECT_TRUE(r.passed) << r.identity;
}

TEST(Bernoulli, EvenSumIdentity) {
  for (unsigned n : {1u, 2u, 5u, 10u}) {
    for (const auto& r : bernoulli_zeta_identity(n)) EXPECT_TRUE(r.passed) << r.identity << " n=" << n;
  }
  // 2!/(1! 3!) = 1/3, and scaled by 2!: [(2)!]^2 / (1! 3!) = 2/3
  EXPECT_EQ(bernoulli_zeta_identity(1).front().lhs, "1/3");
  EXPECT_EQ(bernoulli_zeta_identity(1).back().lhs, "2/3");
  EXPECT_THROW(bernoulli_zeta_identity(0), std::invalid_argument);
}

TEST(ZetaEven, RationalFactors) {
  const auto t = zeta_even_rational(6);
  EXPECT_EQ(t.at(1), Rational(1, 6));
  EXPECT_EQ(t.at(2), Rational(1, 90));
  EXPECT_EQ(t.at(3), Rational(1, 945));
  EXPECT_EQ(t.at(4), Rational(1, 9450));
  EXPECT_EQ(t.at(6), Rational(691, 638512875));
  for (const auto& r : zeta_even_bernoulli_check(16)) EXPECT_TRUE(r.passed) << r.identity;
}

TEST(ZetaEven, SinProduct) {
  const auto reports = sin_product_check(6);
  ASSERT_FALSE(reports.empty());
  for (const auto& r : reports) EXPECT_TRUE(r.passed) << r.identity << ": " << r.lhs << " vs " << r.rhs;
}

TEST(GeneratingFunctions, BinomialFamily) {
  for (const auto& x : {Rational(1), Rational(1, 2), Rational(7, 3)}) {
    const auto reports = section2_report(x, 12);
    EXPECT_EQ(reports.size(), 9u);
    for (const auto& r : reports) EXPECT_TRUE(r.passed) << r.identity << " x=" << x;
  }
  for (const auto& r : cauchy_report(5, 14)) EXPECT_TRUE(r.passed) << r.identity;
  EXPECT_THROW(section2_report(Rational(0), 8), std::invalid_argument);
  EXPECT_THROW(section2_report(Rational(1), 3), std::invalid_argument);
}

TEST(GeneratingFunctions, HarmonicSeriesCoefficients) {
  // -log(1-z)/(1-z) = sum H_n z^n
  const auto f = series::mul(series::geometric(5), Rational(-1) * series::log_one_minus(5), 5);
  EXPECT_EQ(f, RationalSeries({0, 1, Rational(3, 2), Rational(11, 6), Rational(25, 12), Rational(137, 60)}));
}
