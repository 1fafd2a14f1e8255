#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "bellforge/combinatorics.hpp"
#include "bellforge/errors.hpp"
#include "bellforge/rational.hpp"

using namespace bellforge;

namespace {

Rational draw(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 1000);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

}  // namespace

TEST(Rational, CanonicalForm) {
  const Rational q(BigInt(6), BigInt(-4));
  EXPECT_EQ(q.numerator(), -3);
  EXPECT_EQ(q.denominator(), 2);
  EXPECT_EQ(q.str(), "-3/2");
  EXPECT_EQ(Rational(BigInt(4), BigInt(2)).str(), "2");
  EXPECT_TRUE(Rational(BigInt(4), BigInt(2)).is_integer());
}

TEST(Rational, ZeroDenominatorThrows) {
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_THROW(Rational(0).inverse(), std::domain_error);
  EXPECT_THROW(Rational(0).pow(-1), std::domain_error);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("1/2"), Rational(BigInt(1), BigInt(2)));
  EXPECT_EQ(Rational::parse("-7/5"), Rational(BigInt(-7), BigInt(5)));
  EXPECT_EQ(Rational::parse("12"), Rational(12));
  EXPECT_EQ(Rational::parse("4/6").str(), "2/3");
  for (const char* bad : {"", "/", "1/", "/2", "1/0", "1/-2", "a", "1.5", "--1", "1//2", " 1", "1/2/3"}) {
    EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
  }
}

TEST(Rational, PowAndOrdering) {
  EXPECT_EQ(Rational(BigInt(2), BigInt(3)).pow(3), Rational(BigInt(8), BigInt(27)));
  EXPECT_EQ(Rational(BigInt(2), BigInt(3)).pow(-2), Rational(BigInt(9), BigInt(4)));
  EXPECT_EQ(Rational(5).pow(0), Rational(1));
  EXPECT_LT(Rational(BigInt(1), BigInt(3)), Rational(BigInt(1), BigInt(2)));
  EXPECT_GT(Rational(-1).abs(), Rational(0));
  std::ostringstream os;
  os << Rational(BigInt(-3), BigInt(9));
  EXPECT_EQ(os.str(), "-1/3");
}

TEST(Rational, MinusOnePow) {
  EXPECT_EQ(minus_one_pow(0), 1);
  EXPECT_EQ(minus_one_pow(3), -1);
  EXPECT_EQ(minus_one_pow(-1), -1);
}

TEST(RationalProperty, FieldLawsAndRoundTrip) {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 500; ++i) {
    const Rational a = draw(rng);
    const Rational b = draw(rng);
    const Rational c = draw(rng);
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!b.is_zero()) {
      EXPECT_EQ(a * b / b, a);
    }
    EXPECT_EQ(Rational::parse(a.str()), a);
    EXPECT_EQ(-(-a), a);
  }
}

TEST(Combinatorics, BinomialAndFactorial) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(20), BigInt("2432902008176640000"));
  for (unsigned n = 0; n < 30; ++n) {
    BigInt row = 0;
    for (unsigned k = 0; k <= n; ++k) row += binomial(n, k);
    EXPECT_EQ(row, BigInt(1) << n);
  }
}

TEST(Combinatorics, RequireInteger) {
  EXPECT_EQ(require_integer(Rational(BigInt(10), BigInt(5)), "test"), 2);
  EXPECT_THROW(require_integer(Rational(BigInt(1), BigInt(2)), "test"), NonIntegerResult);
}
