#include "bellforge/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "bellforge/errors.hpp"

namespace bellforge {

namespace {

constexpr std::size_t kPoints = 20;

struct Rule {
  std::array<double, kPoints> nodes{};
  std::array<double, kPoints> weights{};
};

// Legendre roots by Newton iteration from the Chebyshev-like initial guesses.
Rule make_rule() {
  Rule rule;
  const auto n = static_cast<double>(kPoints);
  for (std::size_t i = 0; i < kPoints; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= kPoints; ++k) {
        const double kk = static_cast<double>(k);
        const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const Rule& rule() {
  static const Rule r = make_rule();
  return r;
}

double composite(const std::function<double(double)>& f, double a, double b, std::size_t panels) {
  const Rule& g = rule();
  const double h = (b - a) / static_cast<double>(panels);
  double total = 0.0;
  for (std::size_t p = 0; p < panels; ++p) {
    const double mid = a + (static_cast<double>(p) + 0.5) * h;
    double s = 0.0;
    for (std::size_t i = 0; i < kPoints; ++i) s += g.weights[i] * f(mid + 0.5 * h * g.nodes[i]);
    total += 0.5 * h * s;
  }
  return total;
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options) {
  std::size_t panels = options.min_panels;
  std::size_t evaluations = panels * kPoints;
  double previous = composite(f, a, b, panels);
  while (evaluations <= options.max_evaluations) {
    panels *= 2;
    evaluations += panels * kPoints;
    const double current = composite(f, a, b, panels);
    const double diff = std::fabs(current - previous);
    if (!std::isfinite(current)) throw QuadratureError("integrand produced a non-finite value");
    if (diff <= std::fmax(options.abs_tol, options.rel_tol * std::fabs(current))) {
      return {current, diff, evaluations};
    }
    previous = current;
  }
  throw QuadratureError("quadrature budget exhausted on [" + std::to_string(a) + ", " + std::to_string(b) + "]");
}

double decay_cutoff(const std::function<double(double)>& envelope, double start, double threshold) {
  for (double u = start; u <= 1e6; u *= 2.0) {
    bool below = true;
    for (int i = 0; i <= 8 && below; ++i) below = std::fabs(envelope(u * (1.0 + 0.375 * i))) < threshold;
    if (below) return u;
  }
  throw QuadratureError("integrand does not decay below threshold before 1e6");
}

}  // namespace bellforge
