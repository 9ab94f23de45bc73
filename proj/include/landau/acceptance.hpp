#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "landau/enclosure.hpp"
#include "landau/rational.hpp"

namespace landau {

struct AcceptanceOptions {
  PrecisionPolicy precision{};
  unsigned threads = 0;
  /// (k, alpha_k) replacements applied to every coefficient table used.
  std::vector<std::pair<int, Rational>> alpha_overrides;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  /// Failed, but only on sub-checks whose published value is known to
  /// disagree with exact computation (see README). Still reported as FAIL.
  bool documented_discrepancy = false;
  std::string detail;
  double seconds = 0;
  std::optional<double> time_limit_seconds;
};

/// Runs the twelve acceptance criteria in order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

}  // namespace landau
