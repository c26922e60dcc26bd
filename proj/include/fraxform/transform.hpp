#pragma once

#include <string>

#include "fraxform/atoms.hpp"
#include "fraxform/kind.hpp"
#include "fraxform/rational.hpp"
#include "fraxform/specdomain.hpp"

namespace fraxform {

/// A transform-domain value in s = omega^alpha. Sine-kind values have odd
/// numerators, cosine-kind values even ones.
class SpectralExpr {
 public:
  SpectralExpr(Rational alpha, TransformKind kind, RationalS value);

  const Rational& alpha() const { return alpha_; }
  TransformKind kind() const { return kind_; }
  const RationalS& value() const { return value_; }

  friend bool operator==(const SpectralExpr& a, const SpectralExpr& b) {
    return a.alpha_ == b.alpha_ && a.kind_ == b.kind_ && a.value_ == b.value_;
  }

 private:
  Rational alpha_;
  TransformKind kind_;
  RationalS value_;
};

/// Table transform of a single atom E_alpha(-a t^alpha):
///   sine   2 s / (s^2 + a^2)
///   cosine 2 a / (s^2 + a^2)
RationalS table_entry(TransformKind kind, const Rational& rate);

/// Linear extension of the table over the atoms of e.
SpectralExpr forward(const TimeExpr& e, TransformKind kind);

/// Partial fractions followed by the table in reverse:
///   r s / (s^2 + q) -> (r / 2) E_alpha(-sqrt(q) t^alpha)
///   r / (s^2 + q)   -> (r / (2 sqrt(q))) E_alpha(-sqrt(q) t^alpha)
/// Throws irrational_rate when sqrt(q) is not rational.
TimeExpr inverse(const SpectralExpr& f);

/// Transform of f(a x) from the transform of f: a^(-alpha) F(s / a^alpha).
/// a^alpha must be rational (representation error otherwise).
SpectralExpr scale_rule(const SpectralExpr& f, const Rational& a);

struct InitialData {
  Rational value_at_zero;               // f(0)
  Rational alpha_derivative_at_zero;    // f^(alpha)(0)
};

/// Kind of transform the derivative rule for (target, order) consumes.
TransformKind derivative_rule_input_kind(TransformKind target, DerivativeOrder order);

/// Transform of f^(order) of kind `target`, built from the transform of f:
///   cosine, alpha  :  s F_sine - 2 f(0)
///   cosine, 2alpha : -s^2 F_cosine - 2 f^(alpha)(0)
///   sine,   alpha  : -s F_cosine
///   sine,   2alpha : -s^2 F_sine + 2 s f(0)
/// `input.kind()` must match derivative_rule_input_kind (kind_mismatch).
SpectralExpr derivative_rule(const SpectralExpr& input, TransformKind target,
                             DerivativeOrder order, const InitialData& init = {});

/// Exact check of F = 2s/a^2 - (s^2/a^2) F for the table value
/// F = 2s / (s^2 + a^2).
struct ExactIdentityReport {
  bool holds;
  std::string lhs;
  std::string rhs;
};
ExactIdentityReport example1_consistency(const Rational& a);

std::string to_string(const SpectralExpr& f);

}  // namespace fraxform
