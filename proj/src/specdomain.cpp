#include "fraxform/specdomain.hpp"

#include <algorithm>
#include <set>

#include "fraxform/error.hpp"

namespace fraxform {

// ---------------------------------------------------------------------------
// PolyS

PolyS::PolyS(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyS::PolyS(const Rational& c) {
  if (sgn(c) != 0) coeffs_.push_back(c);
}

PolyS PolyS::monomial(std::size_t k, const Rational& c) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return PolyS(std::move(v));
}

void PolyS::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Parity PolyS::parity() const {
  bool has_even = false, has_odd = false;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) == 0) continue;
    (k % 2 == 0 ? has_even : has_odd) = true;
  }
  if (has_even && has_odd) return Parity::mixed;
  if (has_even) return Parity::even;
  if (has_odd) return Parity::odd;
  return Parity::zero;
}

Rational PolyS::eval(const Rational& s) const {
  Rational acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * s + coeffs_[k];
  return acc;
}

double PolyS::eval(double s) const {
  double acc = 0.0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * s + to_double(coeffs_[k]);
  return acc;
}

PolyS PolyS::substitute_scaled(const Rational& b) const {
  if (sgn(b) == 0) throw Error(ErrorKind::invalid_argument, "substitute_scaled: zero scale");
  std::vector<Rational> out(coeffs_.size());
  Rational inv_pow = 1;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    out[k] = coeffs_[k] * inv_pow;
    inv_pow /= b;
  }
  return PolyS(std::move(out));
}

namespace {

// Synthetic division by s^2 + q. Returns quotient and sets remainder (r0 + r1 s).
PolyS quadratic_divmod(const std::vector<Rational>& c, const Rational& q, Rational& r0,
                       Rational& r1) {
  if (c.size() < 3) {
    r0 = c.size() > 0 ? c[0] : Rational(0);
    r1 = c.size() > 1 ? c[1] : Rational(0);
    return PolyS();
  }
  std::vector<Rational> work = c;
  std::vector<Rational> quot(c.size() - 2);
  for (std::size_t k = c.size() - 1; k >= 2; --k) {
    const Rational lead = work[k];
    quot[k - 2] = lead;
    work[k - 2] -= lead * q;
    work[k] = 0;
  }
  r0 = work[0];
  r1 = work[1];
  return PolyS(std::move(quot));
}

}  // namespace

bool PolyS::divisible_by_quadratic(const Rational& q) const {
  if (is_zero()) return true;
  Rational r0, r1;
  quadratic_divmod(coeffs_, q, r0, r1);
  return sgn(r0) == 0 && sgn(r1) == 0;
}

PolyS PolyS::divide_by_quadratic(const Rational& q) const {
  Rational r0, r1;
  PolyS quot = quadratic_divmod(coeffs_, q, r0, r1);
  if (sgn(r0) != 0 || sgn(r1) != 0) {
    throw Error(ErrorKind::invalid_argument, "polynomial is not divisible by s^2+" + to_string(q));
  }
  return quot;
}

PolyS PolyS::even_part_in_u() const {
  std::vector<Rational> out;
  for (std::size_t k = 0; k < coeffs_.size(); k += 2) out.push_back(coeffs_[k]);
  return PolyS(std::move(out));
}

PolyS PolyS::odd_part_in_u() const {
  std::vector<Rational> out;
  for (std::size_t k = 1; k < coeffs_.size(); k += 2) out.push_back(coeffs_[k]);
  return PolyS(std::move(out));
}

PolyS& PolyS::operator+=(const PolyS& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

PolyS& PolyS::operator-=(const PolyS& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

PolyS operator*(const PolyS& a, const PolyS& b) {
  if (a.is_zero() || b.is_zero()) return PolyS();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return PolyS(std::move(out));
}

PolyS poly_add(const PolyS& a, const PolyS& b) { return a + b; }
PolyS poly_mul(const PolyS& a, const PolyS& b) { return a * b; }
Rational poly_eval(const PolyS& p, const Rational& s) { return p.eval(s); }

std::string to_string(const PolyS& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    const Rational& c = p.coeffs()[k];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    if (negative) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    const Rational mag = abs(c);
    if (k == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += "s";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

// ---------------------------------------------------------------------------
// RationalS

RationalS::RationalS(PolyS num, std::vector<Rational> factors)
    : num_(std::move(num)), factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (sgn(factors_[i]) <= 0) {
      throw Error(ErrorKind::out_of_table,
                  "denominator factor s^2+" + to_string(factors_[i]) +
                      " has real roots; only s^2+q with q > 0 is supported");
    }
    if (i > 0 && factors_[i] == factors_[i - 1]) {
      throw Error(ErrorKind::unsupported_multiplicity,
                  "repeated denominator factor s^2+" + to_string(factors_[i]));
    }
  }
  reduce();
}

void RationalS::reduce() {
  if (num_.is_zero()) {
    factors_.clear();
    return;
  }
  std::vector<Rational> kept;
  for (const auto& q : factors_) {
    if (num_.divisible_by_quadratic(q)) {
      num_ = num_.divide_by_quadratic(q);
    } else {
      kept.push_back(q);
    }
  }
  factors_ = std::move(kept);
}

PolyS RationalS::denominator() const {
  PolyS d(1);
  for (const auto& q : factors_) d = d * PolyS::quadratic(q);
  return d;
}

double RationalS::eval(double s) const {
  double den = 1.0;
  for (const auto& q : factors_) den *= s * s + to_double(q);
  return num_.eval(s) / den;
}

RationalS RationalS::divide_by_quadratic(const Rational& q) const {
  if (num_.divisible_by_quadratic(q)) {
    RationalS out;
    out.num_ = num_.divide_by_quadratic(q);
    out.factors_ = factors_;
    out.reduce();
    return out;
  }
  std::vector<Rational> f = factors_;
  f.push_back(q);
  return RationalS(num_, std::move(f));
}

namespace {

// Multiplies p by every factor of `all` that is missing from `have`.
PolyS lift(const PolyS& p, const std::vector<Rational>& have, const std::vector<Rational>& all) {
  PolyS out = p;
  for (const auto& q : all) {
    if (!std::binary_search(have.begin(), have.end(), q)) out = out * PolyS::quadratic(q);
  }
  return out;
}

std::vector<Rational> factor_union(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

RationalS& RationalS::operator+=(const RationalS& o) {
  auto all = factor_union(factors_, o.factors_);
  PolyS num = lift(num_, factors_, all) + lift(o.num_, o.factors_, all);
  *this = RationalS(std::move(num), std::move(all));
  return *this;
}

RationalS& RationalS::operator-=(const RationalS& o) {
  auto all = factor_union(factors_, o.factors_);
  PolyS num = lift(num_, factors_, all) - lift(o.num_, o.factors_, all);
  *this = RationalS(std::move(num), std::move(all));
  return *this;
}

RationalS operator*(const RationalS& a, const RationalS& b) {
  PolyS num = a.num_ * b.num_;
  std::vector<Rational> shared;
  std::set_intersection(a.factors_.begin(), a.factors_.end(), b.factors_.begin(),
                        b.factors_.end(), std::back_inserter(shared));
  for (const auto& q : shared) {
    if (!num.divisible_by_quadratic(q)) {
      throw Error(ErrorKind::unsupported_multiplicity,
                  "product has a repeated factor s^2+" + to_string(q));
    }
    num = num.divide_by_quadratic(q);
  }
  return RationalS(std::move(num), factor_union(a.factors_, b.factors_));
}

std::string to_string(const RationalS& r) {
  if (r.factors().empty()) return to_string(r.num());
  const bool bare = r.num().degree() == 0 && r.num().coeff(0).get_den() == 1 && sgn(r.num().coeff(0)) > 0;
  std::string out = bare ? to_string(r.num()) + "/" : "(" + to_string(r.num()) + ")/";
  if (r.factors().size() == 1) return out + "(" + to_string(PolyS::quadratic(r.factors()[0])) + ")";
  out += "(";
  for (std::size_t i = 0; i < r.factors().size(); ++i) {
    if (i > 0) out += "*";
    out += "(" + to_string(PolyS::quadratic(r.factors()[i])) + ")";
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Partial fractions

std::vector<PartialFraction> partial_fractions(const RationalS& r) {
  if (r.is_zero()) return {};
  if (!r.is_strictly_proper()) {
    throw Error(ErrorKind::improper, "partial fractions need a strictly proper function: " +
                                         to_string(r));
  }
  const Parity parity = r.num().parity();
  if (parity == Parity::mixed) {
    throw Error(ErrorKind::parity,
                "numerator mixes odd and even powers of s: " + to_string(r.num()));
  }
  const bool odd = parity == Parity::odd;
  // num(s) = P(s^2) or s P(s^2); with u = s^2 the function is P(u) / prod (u + q_i),
  // whose residue at u = -q_i is P(-q_i) / prod_{j != i} (q_j - q_i).
  const PolyS p = odd ? r.num().odd_part_in_u() : r.num().even_part_in_u();
  const auto& qs = r.factors();
  std::vector<PartialFraction> out;
  out.reserve(qs.size());
  for (std::size_t i = 0; i < qs.size(); ++i) {
    Rational den = 1;
    for (std::size_t j = 0; j < qs.size(); ++j) {
      if (j != i) den *= qs[j] - qs[i];
    }
    Rational residue = p.eval(Rational(-qs[i])) / den;
    if (sgn(residue) == 0) continue;
    out.push_back({residue, qs[i], odd ? PartialFraction::Shape::odd : PartialFraction::Shape::even});
  }
  return out;
}

RationalS recombine(const std::vector<PartialFraction>& terms) {
  RationalS sum;
  for (const auto& t : terms) {
    const PolyS num = t.shape == PartialFraction::Shape::odd ? PolyS::monomial(1, t.residue)
                                                             : PolyS(t.residue);
    sum += RationalS(num, {t.q});
  }
  return sum;
}

std::string to_string(const PartialFraction& t) {
  const PolyS num = t.shape == PartialFraction::Shape::odd ? PolyS::monomial(1, t.residue)
                                                           : PolyS(t.residue);
  return to_string(RationalS(num, {t.q}));
}

}  // namespace fraxform
