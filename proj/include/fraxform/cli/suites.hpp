#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fraxform/cli/report.hpp"
#include "fraxform/rational.hpp"

namespace fraxform::cli {

struct SuiteOptions {
  Rational alpha = 1;
  std::uint64_t seed = 1;
  /// Overrides the numeric tolerance of the alpha = 1 suites.
  std::optional<double> tol;
  int cases = 50;
};

struct SuiteOutcome {
  bool skipped = false;
  std::string reason;
  std::vector<Check> checks;

  bool passed() const;
};

/// roundtrip, derivative-rules, scaling, convolution, parseval, example1, oracle
const std::vector<std::string>& suite_names();

/// Throws invalid_argument for an unknown suite name.
SuiteOutcome run_suite(std::string_view name, const SuiteOptions& opt);

}  // namespace fraxform::cli
