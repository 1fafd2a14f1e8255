#pragma once

#include <cstddef>
#include <vector>

#include "bellforge/rational.hpp"
#include "bellforge/series.hpp"

namespace bellforge {

/// Signed Stirling numbers of the first kind s(n, 0..n) for one n,
/// defined by x(x-1)...(x-n+1) = sum_k s(n,k) x^k.
struct StirlingRow {
  unsigned n = 0;
  std::vector<BigInt> entries;

  /// s(n, k), zero for k > n.
  BigInt at(unsigned k) const { return k < entries.size() ? entries[k] : BigInt(0); }
  friend bool operator==(const StirlingRow&, const StirlingRow&) = default;
};

/// Expands the falling factorial by repeated multiplication with (x - j).
StirlingRow stirling_row_oracle(unsigned n);

/// Rows 0..n_max of the same expansion, built incrementally.
std::vector<StirlingRow> stirling_triangle(unsigned n_max);

/// s(n, k) from the complete Bell polynomial of the harmonic numbers
/// H_{n-1}^{(j)}: s(n, r+1) = (-1)^{n+r+1} (n-1)!/r! Y_r(H, -1!H^{(2)}, 2!H^{(3)}, ...).
/// Requires n >= 1 and 1 <= k <= n. Throws NonIntegerResult if the rational
/// result is not an integer.
BigInt stirling_via_bell(unsigned n, unsigned k);

/// Row n (n >= 1) assembled from stirling_via_bell, with s(n,0) = 0.
StirlingRow stirling_row_via_bell(unsigned n);

/// Row n (n >= 1) from Shen's recurrence
/// (r+1) s(n, r+2) = -sum_{k=0}^r s(n, r-k+1) H_{n-1}^{(k+1)}, seeded by s(n,1).
StirlingRow shen_recurrence_row(unsigned n);

/// Closed forms for s(n, k), k = 0..4, in terms of H_{n-1}^{(m)}.
/// Throws std::invalid_argument for k > 4 or (k >= 1, n = 0).
BigInt stirling_closed_form(unsigned n, unsigned k);

/// Coefficients of log^r(1-z) through z^N from r! sum_n (-1)^n s(n,r) z^n / n!.
RationalSeries cauchy_log_power(unsigned r, std::size_t N);

}  // namespace bellforge
