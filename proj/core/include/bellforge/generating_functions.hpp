#pragma once

#include <cstddef>
#include <vector>

#include "bellforge/identity_report.hpp"
#include "bellforge/rational.hpp"

namespace bellforge {

/// Exact truncated-series checks of the binomial-series family:
///
///   (1-z)^{-x}                      = sum (x)_n / n! z^n
///   -log(1-z) (1-z)^{-x}            = sum (x)_n H_n(x) / n! z^n
///   (-1)^r log^r(1-z) (1-z)^{-x}    = sum (x)_n Y_r(H_n(x), -1!H_n^{(2)}(x), ...) / n! z^n   (r = 2, 3)
///   -log(1-z) / (1-z)               = sum H_n z^n
///   log^2(1-z) (1-z)^{-x}           = sum (x)_n ([H_n(x)]^2 - H_n^{(2)}(x)) / n! z^n
///   log^2(1-z) / (1-z)              = sum ([H_n]^2 - H_n^{(2)}) z^n
///   -log^3(1-z) / 3                 = sum ([H_n]^2 - H_n^{(2)}) z^n/n - 2 sum H_n/n^2 z^n + 2 Li_3(z)
///
/// Left sides are built with series::pow and cauchy_log_power; right sides from
/// pochhammer / harmonic_shifted coefficient formulas. Requires x > 0, N >= 4.
std::vector<IdentityReport> section2_report(const Rational& x, std::size_t N);

/// cauchy_log_power(r, N) against the r-fold product of log(1-z), r = 1..r_max.
std::vector<IdentityReport> cauchy_report(unsigned r_max, std::size_t N);

}  // namespace bellforge
