#pragma once

#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "fraxform/atoms.hpp"
#include "fraxform/checks.hpp"
#include "fraxform/error.hpp"
#include "fraxform/odesolve.hpp"

namespace fraxform::cli {

using Json = nlohmann::ordered_json;

/// Shortest decimal that round-trips, independent of the locale.
std::string format_double(double x);

/// Integers that fit in 64 bits become JSON numbers, everything else "p/q".
Json rational_json(const Rational& r);

/// [[coef, rate], ...] in canonical (ascending rate) order.
Json atoms_json(const TimeExpr& e);

Json step_json(const SolveStep& s);

/// One entry of the "checks" array.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
  std::optional<double> lhs;
  std::optional<double> rhs;
  std::optional<double> absdiff;
  std::optional<double> tolerance;
};

Check from_identity(const IdentityCheck& c);
Json check_json(const Check& c);

/// {input, alpha, steps, result, checks}
Json document(std::string_view input, const Rational& alpha, const std::vector<SolveStep>& steps,
              Json result, const std::vector<Check>& checks);

Json solve_result(const SolveReport& r);
std::vector<Check> solve_checks(const SolveReport& r);

Json error_json(std::string_view input, const Rational& alpha, const Error& e);

}  // namespace fraxform::cli
