#include <map>

#include "fraxform/lexer.hpp"
#include "fraxform/parser.hpp"

namespace fraxform {

namespace {

using detail::Tok;
using detail::TokenCursor;

constexpr int kMaxDepth = 64;
constexpr long kMaxPower = 32;

// num(s) * prod (s^2 + q)^e, e of either sign.
struct Value {
  PolyS num;
  std::map<Rational, int> factors;
};

// c (s^2 + q) with q > 0 is kept as a factor so products of quadratics can be
// divided by later.
Value normalize(Value v) {
  const PolyS& p = v.num;
  if (p.degree() == 2 && sgn(p.coeff(1)) == 0) {
    const Rational c = p.coeff(2);
    const Rational q = p.coeff(0) / c;
    if (sgn(q) > 0) {
      v.num = PolyS(c);
      if (++v.factors[q] == 0) v.factors.erase(q);
    }
  }
  return v;
}

class SpectralParser {
 public:
  SpectralParser(std::string_view text) : cur_(text) {}  // NOLINT

  RationalS parse() {
    if (cur_.peek().type == Tok::end) cur_.fail(ErrorKind::syntax, cur_.peek(), "empty expression");
    const SourceSpan whole{0, cur_.size()};
    Value v = sum(0);
    cur_.expect(Tok::end, "end of input");
    return to_rational(v, whole);
  }

 private:
  RationalS to_rational(const Value& v, SourceSpan span) const {
    PolyS num = v.num;
    std::vector<Rational> den;
    for (const auto& [q, e] : v.factors) {
      if (e > 0) {
        for (int i = 0; i < e; ++i) num = num * PolyS::quadratic(q);
      } else if (e == -1) {
        den.push_back(q);
      } else {
        cur_.fail(ErrorKind::unsupported_multiplicity, span,
                  "repeated factor (s^2+" + to_string(q) + ") in the denominator");
      }
    }
    return RationalS(num, den);
  }

  Value from_rational(const RationalS& r) const {
    Value v{r.num(), {}};
    for (const auto& q : r.factors()) v.factors[q] = -1;
    return v;
  }

  Value sum(int depth) {
    const SourceSpan begin = cur_.peek().span;
    bool negate = false;
    if (cur_.accept(Tok::minus)) {
      negate = true;
    } else {
      cur_.accept(Tok::plus);
    }
    Value acc = product(depth);
    if (negate) acc.num = -acc.num;
    bool plain = true;
    RationalS total;
    while (cur_.peek().type == Tok::plus || cur_.peek().type == Tok::minus) {
      const bool minus = cur_.next().type == Tok::minus;
      Value rhs = product(depth);
      const SourceSpan span{begin.begin, cur_.peek().span.begin};
      if (plain) {
        total = to_rational(acc, span);
        plain = false;
      }
      RationalS r = to_rational(rhs, span);
      total = minus ? total - r : total + r;
    }
    if (plain) return acc;
    return normalize(from_rational(total));
  }

  Value product(int depth) {
    Value acc = power(depth);
    for (;;) {
      if (cur_.accept(Tok::star)) {
        Value rhs = power(depth);
        acc.num = acc.num * rhs.num;
        for (const auto& [q, e] : rhs.factors) {
          if ((acc.factors[q] += e) == 0) acc.factors.erase(q);
        }
      } else if (cur_.peek().type == Tok::slash) {
        cur_.next();
        const SourceSpan span_begin = cur_.peek().span;
        Value rhs = power(depth);
        const SourceSpan span{span_begin.begin, cur_.peek().span.begin};
        if (rhs.num.degree() != 0) {
          if (rhs.num.is_zero()) cur_.fail(ErrorKind::syntax, span, "division by zero");
          cur_.fail(ErrorKind::out_of_table, span,
                    "denominators must be products of (s^2+q) factors with q > 0");
        }
        const Rational c = rhs.num.coeff(0);
        acc.num = acc.num * PolyS(Rational(1) / c);
        for (const auto& [q, e] : rhs.factors) {
          if ((acc.factors[q] -= e) == 0) acc.factors.erase(q);
        }
      } else {
        return acc;
      }
    }
  }

  Value power(int depth) {
    Value base = primary(depth);
    if (!cur_.accept(Tok::caret)) return base;
    const auto& tok = cur_.expect(Tok::number, "an integer exponent");
    auto n = parse_rational(tok.text);
    if (!n || n->get_den() != 1 || *n > kMaxPower) {
      cur_.fail(ErrorKind::syntax, tok, "exponent must be an integer in [0, " +
                                            std::to_string(kMaxPower) + "]");
    }
    const long k = n->get_num().get_si();
    Value out{PolyS(1), {}};
    for (long i = 0; i < k; ++i) out.num = out.num * base.num;
    for (const auto& [q, e] : base.factors) {
      if (k != 0) out.factors[q] = static_cast<int>(e * k);
    }
    return normalize(out);
  }

  Value primary(int depth) {
    const auto& t = cur_.peek();
    switch (t.type) {
      case Tok::number:
        return Value{PolyS(cur_.number()), {}};
      case Tok::ident:
        if (t.text == "s") {
          cur_.next();
          return Value{PolyS::s(), {}};
        }
        cur_.fail(ErrorKind::unknown_identifier, t,
                  "unknown identifier " + detail::describe(t) + " (the spectral variable is 's')");
      case Tok::lparen: {
        if (depth >= kMaxDepth) cur_.fail(ErrorKind::syntax, t, "nesting too deep");
        cur_.next();
        Value v = sum(depth + 1);
        cur_.expect(Tok::rparen, "')'");
        return normalize(std::move(v));
      }
      default:
        cur_.fail(ErrorKind::syntax, t, "expected a number, 's' or '(', found " + detail::describe(t));
    }
  }

  TokenCursor cur_;
};

}  // namespace

SpectralExpr parse_spectral(std::string_view text, const Rational& alpha, TransformKind kind) {
  require_valid_order(alpha);
  SpectralParser parser(text);
  RationalS value = parser.parse();
  return SpectralExpr(alpha, kind, std::move(value));
}

}  // namespace fraxform
