#pragma once

#include <cstddef>
#include <functional>

namespace bellforge {

struct QuadratureResult {
  double value = 0.0;
  /// |I_2k - I_k| at the accepted refinement.
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

struct QuadratureOptions {
  double abs_tol = 1e-12;
  /// Floor relative to |I|, so large integrals stop at double precision.
  double rel_tol = 4e-15;
  std::size_t min_panels = 8;
  std::size_t max_evaluations = 1u << 22;
};

/// Composite 20-point Gauss-Legendre rule on [a, b], doubling the panel count
/// until successive results agree. Throws QuadratureError if the evaluation
/// budget runs out first.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options = {});

/// Smallest U = start * 2^j with envelope(u) < threshold for every sampled u in [U, 4U].
/// The envelope must eventually decrease monotonically. Throws QuadratureError past 1e6.
double decay_cutoff(const std::function<double(double)>& envelope, double start = 1.0, double threshold = 1e-18);

}  // namespace bellforge
