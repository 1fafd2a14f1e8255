#include "bellforge/bell.hpp"

#include <stdexcept>

#include "bellforge/series.hpp"

namespace bellforge {

unsigned PartitionVector::weight() const {
  unsigned w = 0;
  for (std::size_t j = 0; j < multiplicities.size(); ++j) w += static_cast<unsigned>(j + 1) * multiplicities[j];
  return w;
}

PartitionStream::PartitionStream(unsigned r) : r_(r) {}

std::optional<PartitionVector> PartitionStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (r_ > 0) parts_.push_back(r_);
  } else {
    // Rightmost part that can still be split.
    std::size_t i = parts_.size();
    while (i > 0 && parts_[i - 1] == 1) --i;
    if (i == 0) {
      done_ = true;
      return std::nullopt;
    }
    --i;
    const unsigned v = parts_[i] - 1;
    unsigned remainder = static_cast<unsigned>(parts_.size() - i - 1) + 1;
    parts_.resize(i);
    parts_.push_back(v);
    while (remainder >= v) {
      parts_.push_back(v);
      remainder -= v;
    }
    if (remainder > 0) parts_.push_back(remainder);
  }
  PartitionVector p{std::vector<unsigned>(r_, 0)};
  for (unsigned part : parts_) ++p.multiplicities[part - 1];
  if (r_ == 0) done_ = true;
  return p;
}

std::vector<PartitionVector> enumerate_partitions(unsigned r) {
  std::vector<PartitionVector> out;
  PartitionStream stream(r);
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

BigInt partition_coefficient(const PartitionVector& p) {
  BigInt denom = 1;
  for (std::size_t j = 0; j < p.multiplicities.size(); ++j) {
    const unsigned k = p.multiplicities[j];
    if (k == 0) continue;
    BigInt jf = factorial(j + 1);
    BigInt jf_pow;
    mpz_pow_ui(jf_pow.get_mpz_t(), jf.get_mpz_t(), k);
    denom *= factorial(k) * jf_pow;
  }
  return factorial(p.weight()) / denom;
}

IdentityReport bell_gen_fun_check(std::span<const Rational> xs, std::size_t N) {
  if (xs.size() < N) throw std::invalid_argument("bell_gen_fun_check: need at least N arguments");
  // log-derivative coefficients of sum_j x_j t^j / j!: b_m = m * x_m / m! = x_m / (m-1)!
  auto b = series::generate<Rational>(N, [&](std::size_t m) {
    return m == 0 ? Rational(0) : xs[m - 1] / Rational(factorial(m - 1));
  });
  auto lhs = series::exp_recurrence(b, N);
  auto y = bell_recurrence(xs.first(N));
  auto rhs = series::generate<Rational>(N, [&](std::size_t n) { return y[n] / Rational(factorial(n)); });
  return exact_report("bell-egf", {{"N", std::to_string(N)}, {"args", render(xs.first(N))}}, lhs, rhs);
}

}  // namespace bellforge
