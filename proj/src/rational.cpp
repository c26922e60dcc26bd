#include "fraxform/rational.hpp"

#include <cctype>

#include "fraxform/error.hpp"

namespace fraxform {

void require_valid_order(const Rational& alpha) {
  if (sgn(alpha) <= 0 || alpha > 1) {
    throw Error(ErrorKind::invalid_argument,
                "fractal order must lie in (0, 1], got " + to_string(alpha));
  }
}

std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

namespace {

std::optional<mpz_class> parse_integer(std::string_view digits) {
  if (digits.empty()) return std::nullopt;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  }
  return mpz_class(std::string(digits), 10);
}

std::optional<Rational> parse_decimal(std::string_view text) {
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) {
    auto n = parse_integer(text);
    if (!n) return std::nullopt;
    return Rational(*n);
  }
  const auto whole = text.substr(0, dot);
  const auto frac = text.substr(dot + 1);
  if (whole.empty() && frac.empty()) return std::nullopt;
  mpz_class w = 0;
  if (!whole.empty()) {
    auto n = parse_integer(whole);
    if (!n) return std::nullopt;
    w = *n;
  }
  mpz_class f = 0;
  mpz_class scale = 1;
  if (!frac.empty()) {
    auto n = parse_integer(frac);
    if (!n) return std::nullopt;
    f = *n;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
  }
  Rational r(w * scale + f, scale);
  r.canonicalize();
  return r;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::optional<Rational> value;
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    value = parse_decimal(text);
  } else {
    auto num = parse_decimal(text.substr(0, slash));
    auto den = parse_decimal(text.substr(slash + 1));
    if (!num || !den || sgn(*den) == 0) return std::nullopt;
    value = Rational(*num / *den);
  }
  if (value && negative) *value = -*value;
  return value;
}

namespace {

std::optional<mpz_class> exact_root(const mpz_class& n, unsigned long k) {
  if (sgn(n) < 0) return std::nullopt;
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) == 0) return std::nullopt;
  return r;
}

}  // namespace

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  auto n = exact_root(q.get_num(), 2);
  auto d = exact_root(q.get_den(), 2);
  if (!n || !d) return std::nullopt;
  Rational r(*n, *d);
  r.canonicalize();
  return r;
}

Rational rational_pow(const Rational& base, unsigned long exponent) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num().get_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.get_den().get_mpz_t(), exponent);
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::optional<Rational> exact_power(const Rational& base, const Rational& exponent) {
  if (sgn(base) <= 0) return std::nullopt;
  const mpz_class& p = exponent.get_num();
  const mpz_class& q = exponent.get_den();
  const mpz_class abs_p = abs(p);
  if (!q.fits_ulong_p() || !abs_p.fits_ulong_p()) return std::nullopt;
  auto n = exact_root(base.get_num(), q.get_ui());
  auto d = exact_root(base.get_den(), q.get_ui());
  if (!n || !d) return std::nullopt;
  Rational root(*n, *d);
  root.canonicalize();
  Rational r = rational_pow(root, abs_p.get_ui());
  if (sgn(p) < 0) r = 1 / r;
  return r;
}

}  // namespace fraxform
