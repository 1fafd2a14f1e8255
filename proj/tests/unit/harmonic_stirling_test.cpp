#include <gtest/gtest.h>

#include "bellforge/errors.hpp"
#include "bellforge/generating_functions.hpp"
#include "bellforge/harmonic.hpp"
#include "bellforge/stirling.hpp"

using namespace bellforge;

namespace {

// Falling factorial x(x-1)...(x-n+1) expanded with plain integer arithmetic.
std::vector<BigInt> falling_factorial(unsigned n) {
  std::vector<BigInt> c{1};
  for (unsigned j = 0; j < n; ++j) {
    std::vector<BigInt> next(c.size() + 1, 0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= c[k] * j;
    }
    c = std::move(next);
  }
  return c;
}

}  // namespace

TEST(Harmonic, Values) {
  EXPECT_EQ(harmonic(0, 1), Rational(0));
  EXPECT_EQ(harmonic(3, 1), Rational(11, 6));
  EXPECT_EQ(harmonic(3, 2), Rational(49, 36));
  EXPECT_EQ(harmonic(3, 3), Rational(251, 216));
  EXPECT_EQ(harmonic_shifted(2, 1, Rational(1, 2)), Rational(2) + Rational(2, 3));
  EXPECT_EQ(harmonic_shifted(4, 2, 1), harmonic(4, 2));
}

TEST(Harmonic, PrefixMatchesDirect) {
  const auto h = harmonic_prefix(12, 3, Rational(3, 2));
  ASSERT_EQ(h.size(), 13u);
  for (unsigned n = 0; n <= 12; ++n) EXPECT_EQ(h[n], harmonic_shifted(n, 3, Rational(3, 2)));
}

TEST(Harmonic, PoleThrows) {
  EXPECT_THROW(harmonic_shifted(3, 1, -2), PoleError);
  EXPECT_EQ(harmonic_shifted(2, 1, -2), Rational(-3, 2));  // the pole at k = 2 is out of range
}

TEST(Harmonic, Pochhammer) {
  EXPECT_EQ(pochhammer(Rational(1, 2), 0), Rational(1));
  EXPECT_EQ(pochhammer(Rational(1, 2), 3), Rational(1, 2) * Rational(3, 2) * Rational(5, 2));
  EXPECT_EQ(pochhammer(1, 5), Rational(120));
  EXPECT_EQ(pochhammer(-2, 4), Rational(0));
}

TEST(Harmonic, BellArgumentSigns) {
  const auto plus = harmonic_bell_args(3, 3, 1, HarmonicSigns::kAllPositive);
  const auto pm = harmonic_bell_args(3, 3, 1, HarmonicSigns::kPlusMinus);
  const auto mp = harmonic_bell_args(3, 3, 1, HarmonicSigns::kMinusPlus);
  EXPECT_EQ(plus[1], harmonic(3, 2));
  EXPECT_EQ(plus[2], Rational(2) * harmonic(3, 3));
  EXPECT_EQ(pm[0], plus[0]);
  EXPECT_EQ(pm[1], -plus[1]);
  EXPECT_EQ(mp[0], -plus[0]);
  EXPECT_EQ(mp[1], plus[1]);
}

TEST(Stirling, KnownRow) {
  const auto row = stirling_row_oracle(4);
  EXPECT_EQ(row.entries, (std::vector<BigInt>{0, -6, 11, -6, 1}));
  EXPECT_EQ(row.at(9), 0);
  EXPECT_EQ(stirling_row_oracle(0).entries, (std::vector<BigInt>{1}));
}

TEST(Stirling, ThreeRoutesAgree) {
  const auto triangle = stirling_triangle(16);
  for (unsigned n = 1; n <= 16; ++n) {
    const auto expected = falling_factorial(n);
    EXPECT_EQ(stirling_row_oracle(n).entries, expected) << n;
    EXPECT_EQ(triangle[n].entries, expected) << n;
    EXPECT_EQ(stirling_row_via_bell(n).entries, expected) << n;
    EXPECT_EQ(shen_recurrence_row(n).entries, expected) << n;
  }
}

TEST(Stirling, ClosedForms) {
  for (unsigned n = 1; n <= 14; ++n) {
    const auto expected = falling_factorial(n);
    for (unsigned k = 0; k <= 4; ++k) {
      EXPECT_EQ(stirling_closed_form(n, k), k <= n ? expected[k] : BigInt(0)) << n << "," << k;
    }
  }
  EXPECT_THROW(stirling_closed_form(5, 5), std::invalid_argument);
}

TEST(Stirling, AbsoluteRowSumIsFactorial) {
  for (unsigned n = 1; n <= 12; ++n) {
    BigInt total = 0;
    for (const auto& s : stirling_row_oracle(n).entries) total += abs(s);
    BigInt f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    EXPECT_EQ(total, f);
  }
}

TEST(Stirling, BellRoutePreconditions) {
  EXPECT_THROW(stirling_via_bell(0, 1), std::invalid_argument);
  EXPECT_THROW(stirling_via_bell(3, 4), std::invalid_argument);
  EXPECT_EQ(stirling_via_bell(5, 2), BigInt(-50));
}

TEST(GeneratingFunctions, CauchyLogPowers) {
  for (const auto& r : cauchy_report(5, 20)) EXPECT_TRUE(r.passed) << r.params.at("r");
  // log^2(1-z) = 2 sum H_{n-1} z^n / n
  const auto l2 = cauchy_log_power(2, 6);
  for (unsigned n = 1; n <= 6; ++n) EXPECT_EQ(l2[n], Rational(2) * harmonic(n - 1, 1) / Rational(n));
}

TEST(GeneratingFunctions, BinomialFamilyPasses) {
  for (const auto& x : {Rational(1), Rational(1, 2), Rational(3, 2), Rational(7, 3)}) {
    const auto reports = section2_report(x, 16);
    EXPECT_EQ(reports.size(), 9u);
    for (const auto& r : reports) EXPECT_TRUE(r.passed) << r.identity << " x=" << x;
  }
}

TEST(GeneratingFunctions, Preconditions) {
  EXPECT_THROW(section2_report(0, 8), std::invalid_argument);
  EXPECT_THROW(section2_report(1, 3), std::invalid_argument);
}
