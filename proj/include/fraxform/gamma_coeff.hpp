#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fraxform/rational.hpp"

namespace fraxform {

/// Exact coefficient: a finite Q-linear combination of monomials
///   prod_i Gamma(1 + phi_i)^(e_i),  phi_i rational in (0, 1), e_i integer.
///
/// Every Gamma(1 + x) with rational x >= 0 reduces to a rational multiple of
/// Gamma(1 + frac(x)) through the recurrence, so fractal power-series
/// coefficients such as (-a)^k / Gamma(1 + k alpha) stay exact for rational
/// alpha. Distinct phi are treated as independent symbols; equality is
/// structural.
class GammaCoeff {
 public:
  using Monomial = std::vector<std::pair<Rational, int>>;  // sorted by phi, e != 0

  GammaCoeff() = default;
  GammaCoeff(const Rational& c);  // NOLINT(google-explicit-constructor)
  GammaCoeff(long c) : GammaCoeff(Rational(c)) {}  // NOLINT

  /// Gamma(1 + x) for rational x >= 0.
  static GammaCoeff gamma_one_plus(const Rational& x);

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Rational value when no Gamma symbol survives.
  bool is_rational() const;
  Rational rational_value() const;

  /// Reciprocal of a single-term coefficient; throws for sums.
  GammaCoeff reciprocal() const;

  double to_double() const;
  std::string to_string() const;

  GammaCoeff operator-() const;
  GammaCoeff& operator+=(const GammaCoeff& o);
  GammaCoeff& operator-=(const GammaCoeff& o);
  friend GammaCoeff operator+(GammaCoeff a, const GammaCoeff& b) { return a += b; }
  friend GammaCoeff operator-(GammaCoeff a, const GammaCoeff& b) { return a -= b; }
  friend GammaCoeff operator*(const GammaCoeff& a, const GammaCoeff& b);
  friend bool operator==(const GammaCoeff& a, const GammaCoeff& b);

  const std::map<Monomial, Rational>& terms() const { return terms_; }

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

}  // namespace fraxform
