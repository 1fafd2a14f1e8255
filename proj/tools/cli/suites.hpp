#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bellforge/identity_report.hpp"

namespace bellforge::cli {

/// Optional overrides of the per-check n and r ranges. Unset means the
/// acceptance-level default for each check.
struct Budget {
  std::optional<unsigned> max_n;
  std::optional<unsigned> max_r;

  unsigned n(unsigned fallback) const { return max_n.value_or(fallback); }
  unsigned r(unsigned fallback) const { return max_r.value_or(fallback); }
};

/// bell, stirling, section2, ..., section6, all
const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

/// Runs a suite over `workers` threads. Report order depends only on the
/// suite and budget. Throws std::invalid_argument for an unknown suite.
std::vector<IdentityReport> run_suite(std::string_view name, const Budget& budget, unsigned workers);

}  // namespace bellforge::cli
