#pragma once

#include <vector>

namespace bellforge {

/// Floating-point zeta(2..M) plus Euler's constant, built once and shared read-only.
class ZetaConstants {
 public:
  /// zeta(m) = sum_{k<=K} k^{-m} + K^{1-m}/(m-1) - K^{-m}/2, summed smallest term first.
  /// gamma is bootstrapped as minus the quadrature value of Gamma'(1).
  static ZetaConstants build(unsigned M = 32, unsigned long K = 100000);

  /// zeta(m) for 2 <= m <= max_m(); zeta(1) is defined as Euler's gamma.
  /// Throws std::out_of_range otherwise.
  double zeta(unsigned m) const;
  double euler_gamma() const { return gamma_; }
  unsigned max_m() const { return static_cast<unsigned>(zeta_.size()) - 1; }

 private:
  std::vector<double> zeta_;  // index m; entries 0 and 1 unused
  double gamma_ = 0.0;
};

/// Lazily built ZetaConstants::build() with default arguments.
const ZetaConstants& default_zeta_constants();

}  // namespace bellforge
