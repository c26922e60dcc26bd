#pragma once

#include <string>
#include <vector>

#include "fraxform/fracseries.hpp"
#include "fraxform/rational.hpp"
#include "fraxform/specfun.hpp"

namespace fraxform {

/// coef * E_alpha(-rate t^alpha), rate > 0.
struct Atom {
  Rational coef;
  Rational rate;

  friend bool operator==(const Atom& a, const Atom& b) {
    return a.coef == b.coef && a.rate == b.rate;
  }
};

/// Order of a local fractional derivative: alpha or 2 alpha.
enum class DerivativeOrder { alpha = 1, two_alpha = 2 };

/// Maps an integer multiple of alpha to a supported order; anything other than
/// 1 or 2 is unsupported_order.
DerivativeOrder derivative_order_from_multiple(long multiple);

/// Finite sum of decay atoms in canonical form: distinct rates sorted
/// ascending, no zero coefficients.
class TimeExpr {
 public:
  explicit TimeExpr(Rational alpha, std::vector<Atom> atoms = {});

  static TimeExpr atom(Rational alpha, const Rational& coef, const Rational& rate) {
    return TimeExpr(std::move(alpha), {Atom{coef, rate}});
  }

  const Rational& alpha() const { return alpha_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  bool is_zero() const { return atoms_.empty(); }

  friend bool operator==(const TimeExpr& a, const TimeExpr& b) {
    return a.alpha_ == b.alpha_ && a.atoms_ == b.atoms_;
  }

 private:
  Rational alpha_;
  std::vector<Atom> atoms_;
};

TimeExpr expr_add(const TimeExpr& a, const TimeExpr& b);
TimeExpr expr_scale(const Rational& c, const TimeExpr& a);
inline TimeExpr operator+(const TimeExpr& a, const TimeExpr& b) { return expr_add(a, b); }
inline TimeExpr operator-(const TimeExpr& a, const TimeExpr& b) {
  return expr_add(a, expr_scale(-1, b));
}
inline TimeExpr operator*(const Rational& c, const TimeExpr& a) { return expr_scale(c, a); }

/// Eigen-rule: E_alpha(-a t^alpha)^(alpha) = -a E_alpha(-a t^alpha).
TimeExpr expr_derivative(const TimeExpr& e, DerivativeOrder order);

double expr_eval(const TimeExpr& e, double t, const specfun::EvalConfig& cfg = {});

/// e(0) = sum coef.
Rational expr_value_at_zero(const TimeExpr& e);
/// e^(alpha)(0) = sum coef * (-rate).
Rational expr_alpha_derivative_at_zero(const TimeExpr& e);

/// K-truncated fractal series of the whole expression.
FractalSeries to_series(const TimeExpr& e, std::size_t order = kDefaultSeriesOrder);

/// "11*E(-3*t^a) - 10*E(-2*t^a)"; "0" for the zero expression.
std::string to_string(const TimeExpr& e);

}  // namespace fraxform
