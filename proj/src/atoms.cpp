#include "fraxform/atoms.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "fraxform/error.hpp"

namespace fraxform {

DerivativeOrder derivative_order_from_multiple(long multiple) {
  if (multiple == 1) return DerivativeOrder::alpha;
  if (multiple == 2) return DerivativeOrder::two_alpha;
  throw Error(ErrorKind::unsupported_order,
              "derivative of order " + std::to_string(multiple) + "*alpha is not supported");
}

TimeExpr::TimeExpr(Rational alpha, std::vector<Atom> atoms) : alpha_(std::move(alpha)) {
  require_valid_order(alpha_);
  std::map<Rational, Rational> merged;
  for (auto& a : atoms) {
    if (sgn(a.rate) <= 0) {
      throw Error(ErrorKind::non_positive_rate,
                  "decay atom needs a positive rate, got " + to_string(a.rate));
    }
    merged[a.rate] += a.coef;
  }
  for (auto& [rate, coef] : merged) {
    if (sgn(coef) != 0) atoms_.push_back(Atom{coef, rate});
  }
}

namespace {

void require_same_order(const TimeExpr& a, const TimeExpr& b) {
  if (a.alpha() != b.alpha()) {
    throw Error(ErrorKind::alpha_mismatch, "expressions of different order: " +
                                               to_string(a.alpha()) + " vs " +
                                               to_string(b.alpha()));
  }
}

}  // namespace

TimeExpr expr_add(const TimeExpr& a, const TimeExpr& b) {
  require_same_order(a, b);
  std::vector<Atom> atoms = a.atoms();
  atoms.insert(atoms.end(), b.atoms().begin(), b.atoms().end());
  return TimeExpr(a.alpha(), std::move(atoms));
}

TimeExpr expr_scale(const Rational& c, const TimeExpr& a) {
  std::vector<Atom> atoms;
  atoms.reserve(a.atoms().size());
  for (const auto& x : a.atoms()) atoms.push_back(Atom{c * x.coef, x.rate});
  return TimeExpr(a.alpha(), std::move(atoms));
}

TimeExpr expr_derivative(const TimeExpr& e, DerivativeOrder order) {
  std::vector<Atom> atoms;
  atoms.reserve(e.atoms().size());
  for (const auto& x : e.atoms()) {
    const Rational factor = order == DerivativeOrder::alpha ? Rational(-x.rate)
                                                            : Rational(x.rate * x.rate);
    atoms.push_back(Atom{x.coef * factor, x.rate});
  }
  return TimeExpr(e.alpha(), std::move(atoms));
}

double expr_eval(const TimeExpr& e, double t, const specfun::EvalConfig& cfg) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw Error(ErrorKind::invalid_argument, "expr_eval: t must be finite and >= 0");
  }
  const double alpha = to_double(e.alpha());
  const double ta = std::pow(t, alpha);
  double sum = 0.0;
  for (const auto& x : e.atoms()) {
    sum += to_double(x.coef) * specfun::mittag_leffler(alpha, -to_double(x.rate) * ta, cfg);
  }
  return sum;
}

Rational expr_value_at_zero(const TimeExpr& e) {
  Rational sum = 0;
  for (const auto& x : e.atoms()) sum += x.coef;
  return sum;
}

Rational expr_alpha_derivative_at_zero(const TimeExpr& e) {
  Rational sum = 0;
  for (const auto& x : e.atoms()) sum -= x.coef * x.rate;
  return sum;
}

FractalSeries to_series(const TimeExpr& e, std::size_t order) {
  FractalSeries out = FractalSeries::zero(e.alpha(), order);
  for (const auto& x : e.atoms()) {
    out = series_add(out, FractalSeries::mittag_leffler(e.alpha(), x.coef, x.rate, order));
  }
  return out;
}

std::string to_string(const TimeExpr& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& x : e.atoms()) {
    const bool negative = sgn(x.coef) < 0;
    const Rational mag = abs(x.coef);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (mag != 1) out += to_string(mag) + "*";
    out += "E(-" + to_string(x.rate) + "*t^a)";
  }
  return out;
}

}  // namespace fraxform
