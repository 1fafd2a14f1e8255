#include "bellforge/zeta_constants.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bellforge/gamma.hpp"

namespace bellforge {

namespace {

// Compensated (Neumaier) sum of k^{-m}, k = K down to 1.
double power_sum(unsigned m, unsigned long K) {
  double sum = 0.0;
  double carry = 0.0;
  for (unsigned long k = K; k >= 1; --k) {
    const double term = std::pow(static_cast<double>(k), -static_cast<double>(m));
    const double t = sum + term;
    carry += std::fabs(sum) >= std::fabs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return sum + carry;
}

}  // namespace

ZetaConstants ZetaConstants::build(unsigned M, unsigned long K) {
  if (M < 2) throw std::invalid_argument("ZetaConstants::build: M must be >= 2");
  if (K < 10) throw std::invalid_argument("ZetaConstants::build: K must be >= 10");
  ZetaConstants c;
  c.zeta_.assign(M + 1, 0.0);
  const double k = static_cast<double>(K);
  for (unsigned m = 2; m <= M; ++m) {
    const double md = m;
    c.zeta_[m] = power_sum(m, K) + std::pow(k, 1.0 - md) / (md - 1.0) - std::pow(k, -md) / 2.0;
  }
  c.gamma_ = -gamma_deriv_quadrature(1).value;
  return c;
}

double ZetaConstants::zeta(unsigned m) const {
  if (m == 1) return gamma_;
  if (m < 2 || m >= zeta_.size()) throw std::out_of_range("zeta(" + std::to_string(m) + ") not tabulated");
  return zeta_[m];
}

const ZetaConstants& default_zeta_constants() {
  static const ZetaConstants constants = ZetaConstants::build();
  return constants;
}

}  // namespace bellforge
