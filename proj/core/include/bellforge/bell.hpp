#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bellforge/combinatorics.hpp"
#include "bellforge/domain.hpp"
#include "bellforge/identity_report.hpp"
#include "bellforge/rational.hpp"

namespace bellforge {

/// Multiplicities (k_1, ..., k_r) of an integer partition of r:
/// k_j counts the parts equal to j, so sum_j j * k_j = r.
struct PartitionVector {
  std::vector<unsigned> multiplicities;

  /// sum_j j * k_j
  unsigned weight() const;
  friend bool operator==(const PartitionVector&, const PartitionVector&) = default;
  friend auto operator<=>(const PartitionVector&, const PartitionVector&) = default;
};

/// Streams the partitions of r one at a time, largest part first:
/// (r), (r-1, 1), (r-2, 2), (r-2, 1, 1), ..., (1, ..., 1).
/// Holds O(r) state regardless of how many partitions r has.
class PartitionStream {
 public:
  explicit PartitionStream(unsigned r);

  /// Next partition as a multiplicity vector of length r, or nullopt when done.
  std::optional<PartitionVector> next();

 private:
  unsigned r_;
  std::vector<unsigned> parts_;  // non-increasing
  bool started_ = false;
  bool done_ = false;
};

/// Every partition of r exactly once (a single empty vector for r = 0).
std::vector<PartitionVector> enumerate_partitions(unsigned r);

/// r! / (prod_j k_j! (j!)^{k_j}): the integer coefficient of one partition term.
BigInt partition_coefficient(const PartitionVector& p);

/// Y_r(x_1, ..., x_r) by direct summation over all partitions of r.
/// Exponential in r; the ground truth for bell_recurrence.
template <CoefficientDomain T>
T bell_partition_sum(std::span<const T> xs) {
  const auto r = static_cast<unsigned>(xs.size());
  if (r == 0) return domain_value<T>(1);
  T total{};
  PartitionStream stream(r);
  while (auto p = stream.next()) {
    T term = domain_value<T>(Rational(partition_coefficient(*p)));
    for (unsigned j = 0; j < r; ++j) {
      for (unsigned e = 0; e < p->multiplicities[j]; ++e) term = term * xs[j];
    }
    total = total + term;
  }
  return total;
}

/// Y_0..Y_r via Y_{m+1} = sum_{k=0}^m C(m,k) Y_{m-k} x_{k+1}.
template <CoefficientDomain T>
std::vector<T> bell_recurrence(std::span<const T> xs) {
  std::vector<T> y;
  y.reserve(xs.size() + 1);
  y.push_back(domain_value<T>(1));
  for (std::size_t m = 0; m < xs.size(); ++m) {
    T acc{};
    for (std::size_t k = 0; k <= m; ++k) {
      acc = acc + domain_value<T>(Rational(binomial(m, static_cast<long>(k)))) * y[m - k] * xs[k];
    }
    y.push_back(std::move(acc));
  }
  return y;
}

/// Y_r(x_1..x_r) through the recurrence; r = xs.size().
template <CoefficientDomain T>
T bell(std::span<const T> xs) {
  return bell_recurrence(xs).back();
}

/// Checks exp(sum_j x_j t^j / j!) = sum_n Y_n t^n / n! through order N,
/// exponentiating with series::exp_recurrence and comparing against
/// bell_recurrence. Requires xs.size() >= N.
IdentityReport bell_gen_fun_check(std::span<const Rational> xs, std::size_t N);

}  // namespace bellforge
