#pragma once

#include <string>
#include <vector>

#include "fraxform/rational.hpp"

namespace fraxform {

/// Parity of a polynomial in s.
enum class Parity { zero, even, odd, mixed };

/// Dense polynomial in s with exact coefficients, low to high. The zero
/// polynomial has no coefficients.
class PolyS {
 public:
  PolyS() = default;
  explicit PolyS(std::vector<Rational> coeffs);
  PolyS(const Rational& c);  // NOLINT(google-explicit-constructor)
  PolyS(long c) : PolyS(Rational(c)) {}  // NOLINT

  static PolyS s() { return PolyS(std::vector<Rational>{0, 1}); }
  /// s^2 + q
  static PolyS quadratic(const Rational& q) { return PolyS(std::vector<Rational>{q, 0, 1}); }
  static PolyS monomial(std::size_t k, const Rational& c);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Parity parity() const;

  Rational eval(const Rational& s) const;
  double eval(double s) const;

  /// p(s / b) for b != 0.
  PolyS substitute_scaled(const Rational& b) const;

  /// Quotient by (s^2 + q) when the division is exact.
  bool divisible_by_quadratic(const Rational& q) const;
  PolyS divide_by_quadratic(const Rational& q) const;

  /// Coefficients of P where p(s) = P(s^2) (even) or p(s) = s P(s^2) (odd).
  PolyS even_part_in_u() const;
  PolyS odd_part_in_u() const;

  PolyS& operator+=(const PolyS& o);
  PolyS& operator-=(const PolyS& o);
  friend PolyS operator+(PolyS a, const PolyS& b) { return a += b; }
  friend PolyS operator-(PolyS a, const PolyS& b) { return a -= b; }
  friend PolyS operator-(const PolyS& a) { return PolyS(0) - a; }
  friend PolyS operator*(const PolyS& a, const PolyS& b);
  friend bool operator==(const PolyS& a, const PolyS& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

PolyS poly_add(const PolyS& a, const PolyS& b);
PolyS poly_mul(const PolyS& a, const PolyS& b);
Rational poly_eval(const PolyS& p, const Rational& s);

/// "2*s^3-5*s+1"; "0" for the zero polynomial.
std::string to_string(const PolyS& p);

/// num(s) / prod_i (s^2 + q_i), q_i > 0 distinct, sorted ascending.
/// Always reduced: no factor of the denominator divides the numerator, and the
/// zero function has no denominator factors.
class RationalS {
 public:
  RationalS() = default;
  RationalS(PolyS num, std::vector<Rational> factors);
  RationalS(const PolyS& p) : RationalS(p, {}) {}  // NOLINT(google-explicit-constructor)

  const PolyS& num() const { return num_; }
  const std::vector<Rational>& factors() const { return factors_; }
  bool is_zero() const { return num_.is_zero(); }
  PolyS denominator() const;
  bool is_strictly_proper() const {
    return num_.degree() < 2 * static_cast<long>(factors_.size());
  }

  /// Value at a real point, numerator and denominator in double.
  double eval(double s) const;

  /// this / (s^2 + q); a factor already present is unsupported_multiplicity
  /// unless the numerator absorbs it.
  RationalS divide_by_quadratic(const Rational& q) const;

  RationalS& operator+=(const RationalS& o);
  RationalS& operator-=(const RationalS& o);
  friend RationalS operator+(RationalS a, const RationalS& b) { return a += b; }
  friend RationalS operator-(RationalS a, const RationalS& b) { return a -= b; }
  friend RationalS operator-(const RationalS& a) { return RationalS() - a; }
  friend RationalS operator*(const RationalS& a, const RationalS& b);
  friend bool operator==(const RationalS& a, const RationalS& b) {
    return a.num_ == b.num_ && a.factors_ == b.factors_;
  }

 private:
  void reduce();
  PolyS num_;
  std::vector<Rational> factors_;
};

/// "(2*s)/((s^2+4)*(s^2+9))"
std::string to_string(const RationalS& r);

/// Table-shaped term: residue * s / (s^2 + q) (odd) or residue / (s^2 + q) (even).
struct PartialFraction {
  enum class Shape { odd, even };
  Rational residue;
  Rational q;
  Shape shape;

  friend bool operator==(const PartialFraction& a, const PartialFraction& b) {
    return a.residue == b.residue && a.q == b.q && a.shape == b.shape;
  }
};

/// Decomposes a strictly proper function with pure-parity numerator over
/// distinct factors. One term per factor, ordered by q. Throws improper or
/// parity.
std::vector<PartialFraction> partial_fractions(const RationalS& r);

/// Sum of the terms over their common denominator.
RationalS recombine(const std::vector<PartialFraction>& terms);

std::string to_string(const PartialFraction& t);

}  // namespace fraxform
