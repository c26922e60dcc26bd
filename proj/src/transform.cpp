#include "fraxform/transform.hpp"

#include "fraxform/error.hpp"

namespace fraxform {

namespace {

void check_parity(TransformKind kind, const RationalS& value) {
  const Parity p = value.num().parity();
  if (p == Parity::zero) return;
  const Parity want = kind == TransformKind::sine ? Parity::odd : Parity::even;
  if (p != want) {
    throw Error(ErrorKind::parity, std::string(to_string(kind)) +
                                       "-kind value needs an " +
                                       (want == Parity::odd ? "odd" : "even") +
                                       " numerator, got " + to_string(value.num()));
  }
}

}  // namespace

SpectralExpr::SpectralExpr(Rational alpha, TransformKind kind, RationalS value)
    : alpha_(std::move(alpha)), kind_(kind), value_(std::move(value)) {
  require_valid_order(alpha_);
  check_parity(kind_, value_);
}

RationalS table_entry(TransformKind kind, const Rational& rate) {
  if (sgn(rate) <= 0) {
    throw Error(ErrorKind::non_positive_rate, "transform table needs a positive rate");
  }
  const PolyS num = kind == TransformKind::sine ? PolyS::monomial(1, 2) : PolyS(Rational(2 * rate));
  return RationalS(num, {Rational(rate * rate)});
}

SpectralExpr forward(const TimeExpr& e, TransformKind kind) {
  RationalS sum;
  for (const auto& atom : e.atoms()) {
    sum += RationalS(PolyS(atom.coef)) * table_entry(kind, atom.rate);
  }
  return SpectralExpr(e.alpha(), kind, std::move(sum));
}

TimeExpr inverse(const SpectralExpr& f) {
  std::vector<Atom> atoms;
  for (const auto& term : partial_fractions(f.value())) {
    const bool odd = term.shape == PartialFraction::Shape::odd;
    if (odd != (f.kind() == TransformKind::sine)) {
      throw Error(ErrorKind::parity, "partial fraction shape does not match transform kind");
    }
    const auto root = exact_sqrt(term.q);
    if (!root) {
      throw Error(ErrorKind::irrational_rate,
                  "pole s^2+" + to_string(term.q) + " has no rational square root");
    }
    const Rational coef = odd ? Rational(term.residue / 2) : Rational(term.residue / (2 * *root));
    atoms.push_back(Atom{coef, *root});
  }
  return TimeExpr(f.alpha(), std::move(atoms));
}

SpectralExpr scale_rule(const SpectralExpr& f, const Rational& a) {
  if (sgn(a) <= 0) throw Error(ErrorKind::invalid_argument, "scale factor must be positive");
  const auto b = exact_power(a, f.alpha());
  if (!b) {
    throw Error(ErrorKind::representation, to_string(a) + "^" + to_string(f.alpha()) +
                                               " is not rational");
  }
  // a^-alpha N(s/b) / prod (s^2/b^2 + q_i) = N(s/b) b^(2n-1) / prod (s^2 + b^2 q_i)
  const auto& qs = f.value().factors();
  const long n = static_cast<long>(qs.size());
  Rational factor = 1;
  if (2 * n - 1 >= 0) {
    factor = rational_pow(*b, static_cast<unsigned long>(2 * n - 1));
  } else {
    factor = 1 / *b;
  }
  PolyS num = f.value().num().substitute_scaled(*b) * PolyS(factor);
  std::vector<Rational> scaled;
  scaled.reserve(qs.size());
  for (const auto& q : qs) scaled.push_back(*b * *b * q);
  return SpectralExpr(f.alpha(), f.kind(), RationalS(std::move(num), std::move(scaled)));
}

TransformKind derivative_rule_input_kind(TransformKind target, DerivativeOrder order) {
  if (order == DerivativeOrder::two_alpha) return target;
  return target == TransformKind::sine ? TransformKind::cosine : TransformKind::sine;
}

SpectralExpr derivative_rule(const SpectralExpr& input, TransformKind target,
                             DerivativeOrder order, const InitialData& init) {
  const TransformKind need = derivative_rule_input_kind(target, order);
  if (input.kind() != need) {
    throw Error(ErrorKind::kind_mismatch,
                std::string("rule for the ") + std::string(to_string(target)) +
                    " transform of this derivative consumes a " + std::string(to_string(need)) +
                    " transform, got " + std::string(to_string(input.kind())));
  }
  const RationalS& f = input.value();
  const RationalS s = PolyS::s();
  const RationalS s2 = PolyS::monomial(2, 1);
  RationalS out;
  if (target == TransformKind::cosine && order == DerivativeOrder::alpha) {
    out = s * f - PolyS(Rational(2 * init.value_at_zero));
  } else if (target == TransformKind::cosine) {
    out = -(s2 * f) - PolyS(Rational(2 * init.alpha_derivative_at_zero));
  } else if (order == DerivativeOrder::alpha) {
    out = -(s * f);
  } else {
    out = -(s2 * f) + PolyS::monomial(1, 2 * init.value_at_zero);
  }
  return SpectralExpr(input.alpha(), target, std::move(out));
}

ExactIdentityReport example1_consistency(const Rational& a) {
  if (sgn(a) <= 0) throw Error(ErrorKind::invalid_argument, "example1_consistency needs a > 0");
  const Rational a2 = a * a;
  const RationalS table = table_entry(TransformKind::sine, a);
  const RationalS rhs = RationalS(PolyS::monomial(1, 2 / a2)) -
                        RationalS(PolyS::monomial(2, 1 / a2)) * table;
  return {table == rhs, to_string(table), to_string(rhs)};
}

std::string to_string(const SpectralExpr& f) { return to_string(f.value()); }

}  // namespace fraxform
