#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bellforge/series.hpp"

using namespace bellforge;

namespace {

template <class A, class B>
concept Multipliable = requires(const A& a, const B& b) { series::mul(a, b, 1); };

RationalSeries random_series(std::mt19937_64& rng, std::size_t N, bool unit_constant) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  return series::generate<Rational>(N, [&](std::size_t n) {
    if (n == 0) return unit_constant ? Rational(1) : Rational(0);
    return Rational(BigInt(num(rng)), BigInt(den(rng)));
  });
}

}  // namespace

static_assert(Multipliable<RationalSeries, RationalSeries>);
static_assert(!Multipliable<RationalSeries, FloatSeries>, "mixing coefficient domains must not compile");

TEST(Series, EmptyCoefficientsRejected) {
  EXPECT_THROW(RationalSeries(std::vector<Rational>{}), std::invalid_argument);
}

TEST(Series, OrderChecks) {
  const auto g = series::geometric(4);
  EXPECT_THROW(series::mul(g, g, 5), std::out_of_range);
  EXPECT_THROW(g.truncated(5), std::out_of_range);
  EXPECT_EQ(g.truncated(2).order(), 2u);
}

TEST(Series, GeometricSquared) {
  // 1/(1-z)^2 = sum (n+1) z^n
  const auto sq = series::mul(series::geometric(8), series::geometric(8), 8);
  for (std::size_t n = 0; n <= 8; ++n) EXPECT_EQ(sq[n], Rational(static_cast<long>(n + 1)));
}

TEST(Series, LogOfGeometric) {
  // log(1/(1-z)) = -log(1-z)
  EXPECT_EQ(series::log(series::geometric(10), 10), Rational(-1) * series::log_one_minus(10));
}

TEST(Series, ExpRecurrenceOfOnes) {
  // b_m = 1 for all m gives 1/(1-x)
  const auto b = series::generate<Rational>(10, [](std::size_t m) { return m == 0 ? Rational(0) : Rational(1); });
  EXPECT_EQ(series::exp_recurrence(b, 10), series::geometric(10));
}

TEST(Series, Preconditions) {
  const auto g = series::geometric(5);
  EXPECT_THROW(series::exp_recurrence(g, 5), std::invalid_argument);
  EXPECT_THROW(series::exp(g, 5), std::invalid_argument);
  EXPECT_THROW(series::log(Rational(2) * g, 5), std::invalid_argument);
  EXPECT_THROW(series::log(series::log_one_minus(5), 5), std::domain_error);
  EXPECT_THROW(series::pow(series::log_one_minus(5), Rational(1, 2), 5), std::domain_error);
  EXPECT_THROW(series::compose(g, g, 5), std::invalid_argument);
}

TEST(Series, SquareRoot) {
  // (1-4z)^{-1/2} = sum C(2n, n) z^n
  const auto s = series::pow(series::linear(-4, 10), Rational(-1, 2), 10);
  const long central[] = {1, 2, 6, 20, 70, 252, 924, 3432, 12870, 48620, 184756};
  for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(s[n], Rational(central[n]));
}

TEST(Series, ComposeGeometricWithLinear) {
  // 1/(1 - 2z) from geometric composed with 2z
  const auto inner = series::generate<Rational>(6, [](std::size_t n) { return n == 1 ? Rational(2) : Rational(0); });
  const auto c = series::compose(series::geometric(6), inner, 6);
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(c[n], Rational(2).pow(static_cast<int>(n)));
}

TEST(Series, PolylogCoefficients) {
  const auto li2 = series::polylog(2, 4);
  EXPECT_EQ(li2[0], Rational(0));
  EXPECT_EQ(li2[3], Rational(1, 9));
}

TEST(Series, FloatExpMatchesStd) {
  const auto f = series::generate<double>(25, [](std::size_t n) { return n == 1 ? 1.0 : 0.0; });
  const auto e = series::exp(f, 25);
  for (double x : {-1.0, 0.3, 1.0}) EXPECT_NEAR(series::evaluate(e, x), std::exp(x), 1e-14);
}

TEST(SeriesProperty, ExpLogInverse) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 40; ++i) {
    const auto a = random_series(rng, 10, true);
    EXPECT_EQ(series::exp(series::log(a, 10), 10), a);
    const auto f = random_series(rng, 10, false);
    EXPECT_EQ(series::log(series::exp(f, 10), 10), f);
  }
}

TEST(SeriesProperty, PowMatchesProducts) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    const auto a = random_series(rng, 8, true);
    EXPECT_EQ(series::pow(a, 3, 8), series::mul(series::mul(a, a, 8), a, 8));
    EXPECT_EQ(series::mul(series::reciprocal(a, 8), a, 8), RationalSeries::one(8));
    const auto half = series::pow(a, Rational(1, 2), 8);
    EXPECT_EQ(series::mul(half, half, 8), a);
  }
}

TEST(SeriesProperty, ComposeIsAssociativeWithMul) {
  // (f * g)(h) = f(h) * g(h)
  std::mt19937_64 rng(13);
  for (int i = 0; i < 20; ++i) {
    const auto f = random_series(rng, 7, true);
    const auto g = random_series(rng, 7, true);
    const auto h = random_series(rng, 7, false);
    EXPECT_EQ(series::compose(series::mul(f, g, 7), h, 7),
              series::mul(series::compose(f, h, 7), series::compose(g, h, 7), 7));
  }
}
