#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fraxform/atoms.hpp"
#include "fraxform/kind.hpp"
#include "fraxform/specdomain.hpp"

namespace fraxform {

/// c2 y^(2 alpha) + c0 y = forcing, with y(0) (sine route) or y^(alpha)(0)
/// (cosine route).
struct OdeProblem {
  Rational alpha = 1;
  Rational c2 = 1;
  Rational c0 = 0;
  TimeExpr forcing{1};
  TransformKind route = TransformKind::sine;
  Rational initial = 0;
};

/// "y^(2a) - 9*y = 50*E(-2*t^a); y(0)=1"; reparses to the same problem.
std::string to_string(const OdeProblem& p);

struct SolveStep {
  std::string rule;
  std::string paper_eq;
  std::string before;
  std::string after;
};

struct SolveReport {
  std::string transformed_equation;
  RationalS spectral_solution;
  std::vector<PartialFraction> partial_fractions;
  TimeExpr solution{1};
  TimeExpr residual_exact{1};
  bool initial_condition_reproduced = false;
  /// Max finite-difference residual over the default grid; alpha = 1 only.
  std::optional<double> residual_numeric_alpha1;
  std::vector<SolveStep> steps;

  bool accepted() const { return residual_exact.is_zero() && initial_condition_reproduced; }
};

/// Default sample points for the alpha = 1 numeric residual.
inline constexpr double kResidualGrid[] = {0.1, 0.5, 1.0, 2.0, 5.0};

/// Transform method: derivative rule, algebraic solve for Y(s), partial
/// fractions, inverse table. Errors: out_of_table (q <= 0), resonance (q equals
/// a forcing pole), irrational_rate (sqrt(q) not rational), invalid_argument
/// (c2 = 0).
SolveReport solve(const OdeProblem& p);

struct ResidualReport {
  TimeExpr residual_exact{1};
  bool initial_condition_reproduced = false;
  std::optional<double> residual_numeric_alpha1;

  bool accepted() const { return residual_exact.is_zero() && initial_condition_reproduced; }
};

/// Exact residual c2 y^(2 alpha) + c0 y - forcing in atom algebra, the initial
/// datum check, and at alpha = 1 the max |residual| with y'' from fourth-order
/// central differences of the classical solution.
ResidualReport verify(const OdeProblem& p, const TimeExpr& y,
                      std::span<const double> grid = kResidualGrid);

}  // namespace fraxform
