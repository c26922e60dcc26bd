#include "fraxform/gamma_coeff.hpp"

#include <cmath>
#include <sstream>

#include "fraxform/error.hpp"
#include "fraxform/specfun.hpp"

namespace fraxform {

GammaCoeff::GammaCoeff(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Monomial{}, c);
}

GammaCoeff GammaCoeff::gamma_one_plus(const Rational& x) {
  if (sgn(x) < 0) {
    throw Error(ErrorKind::invalid_argument, "gamma_one_plus: negative argument");
  }
  mpz_class whole;
  mpz_fdiv_q(whole.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  Rational phi = x - Rational(whole);
  // Gamma(1 + phi + n) = (phi + 1)(phi + 2)...(phi + n) Gamma(1 + phi)
  Rational factor = 1;
  for (mpz_class i = 1; i <= whole; ++i) factor *= phi + Rational(i);
  GammaCoeff out;
  if (sgn(phi) == 0) {
    out.terms_.emplace(Monomial{}, factor);
  } else {
    out.terms_.emplace(Monomial{{phi, 1}}, factor);
  }
  return out;
}

bool GammaCoeff::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational GammaCoeff::rational_value() const {
  if (!is_rational()) {
    throw Error(ErrorKind::representation, "coefficient is not rational: " + to_string());
  }
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

GammaCoeff GammaCoeff::reciprocal() const {
  if (!is_monomial()) {
    throw Error(ErrorKind::representation, "reciprocal of a non-monomial coefficient");
  }
  const auto& [m, c] = *terms_.begin();
  Monomial inv = m;
  for (auto& [phi, e] : inv) e = -e;
  GammaCoeff out;
  out.terms_.emplace(std::move(inv), 1 / c);
  return out;
}

double GammaCoeff::to_double() const {
  double total = 0.0;
  for (const auto& [m, c] : terms_) {
    double v = fraxform::to_double(c);
    for (const auto& [phi, e] : m) {
      v *= std::pow(specfun::gamma(1.0 + fraxform::to_double(phi)), e);
    }
    total += v;
  }
  return total;
}

std::string GammaCoeff::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << fraxform::to_string(c);
    for (const auto& [phi, e] : m) {
      os << "*Gamma(1+" << fraxform::to_string(phi) << ")";
      if (e != 1) os << "^(" << e << ")";
    }
  }
  return os.str();
}

void GammaCoeff::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

GammaCoeff GammaCoeff::operator-() const {
  GammaCoeff out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

GammaCoeff& GammaCoeff::operator+=(const GammaCoeff& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GammaCoeff& GammaCoeff::operator-=(const GammaCoeff& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

namespace {

GammaCoeff::Monomial multiply(const GammaCoeff::Monomial& a, const GammaCoeff::Monomial& b) {
  GammaCoeff::Monomial out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      const int e = a[i].second + b[j].second;
      if (e != 0) out.emplace_back(a[i].first, e);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

GammaCoeff operator*(const GammaCoeff& a, const GammaCoeff& b) {
  GammaCoeff out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term(multiply(ma, mb), Rational(ca * cb));
    }
  }
  return out;
}

bool operator==(const GammaCoeff& a, const GammaCoeff& b) { return a.terms_ == b.terms_; }

}  // namespace fraxform
