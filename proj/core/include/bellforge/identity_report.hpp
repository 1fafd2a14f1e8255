#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>

#include "bellforge/rational.hpp"
#include "bellforge/series.hpp"

namespace bellforge {

/// Pass/fail record for one verified identity instance.
///
/// `tolerance` is empty for exact (literal rational) comparisons.
struct IdentityReport {
  std::string identity;
  std::map<std::string, std::string> params;
  std::string lhs;
  std::string rhs;
  bool passed = false;
  std::optional<double> tolerance;

  /// "exact" or the tolerance with 17 significant digits.
  std::string tolerance_str() const;
};

using Params = std::map<std::string, std::string>;

std::string render(const Rational& q);
/// 17 significant digits.
std::string render(double x);
std::string render(std::span<const Rational> values);
std::string render(const RationalSeries& s);

IdentityReport exact_report(std::string identity, Params params, const Rational& lhs, const Rational& rhs);
IdentityReport exact_report(std::string identity, Params params, const RationalSeries& lhs,
                            const RationalSeries& rhs);
IdentityReport float_report(std::string identity, Params params, double lhs, double rhs, double abs_tol);

/// Report for a failed computation (pole, quadrature budget, ...).
IdentityReport error_report(std::string identity, Params params, const std::string& message);

bool all_passed(std::span<const IdentityReport> reports);

}  // namespace bellforge
