#include "fraxform/parser.hpp"

#include <cctype>

#include "fraxform/lexer.hpp"

namespace fraxform {

namespace detail {

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok t, std::size_t begin, std::size_t end) {
    out.push_back({t, text.substr(begin, end - begin), {begin, end}});
  };
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t begin = i;
    if (std::isdigit(c) || (c == '.' && i + 1 < text.size() &&
                            std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      }
      push(Tok::number, begin, i);
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      push(Tok::ident, begin, i);
      continue;
    }
    Tok t;
    switch (c) {
      case '+': t = Tok::plus; break;
      case '-': t = Tok::minus; break;
      case '*': t = Tok::star; break;
      case '/': t = Tok::slash; break;
      case '^': t = Tok::caret; break;
      case '(': t = Tok::lparen; break;
      case ')': t = Tok::rparen; break;
      case '=': t = Tok::equals; break;
      case ';': t = Tok::semicolon; break;
      default:
        throw ParseError(ErrorKind::syntax, {begin, begin + 1},
                         "unexpected character '" + std::string(1, static_cast<char>(c)) +
                             "' at offset " + std::to_string(begin));
    }
    ++i;
    push(t, begin, i);
  }
  out.push_back({Tok::end, {}, {text.size(), text.size()}});
  return out;
}

std::string describe(const Token& t) {
  if (t.type == Tok::end) return "end of input";
  return "'" + std::string(t.text) + "'";
}

const Token& TokenCursor::expect(Tok t, std::string_view what) {
  if (peek().type != t) {
    fail(ErrorKind::syntax, peek(), "expected " + std::string(what) + ", found " + describe(peek()));
  }
  return next();
}

const Token& TokenCursor::expect_ident(std::string_view name) {
  if (peek().type != Tok::ident || peek().text != name) {
    fail(ErrorKind::syntax, peek(),
         "expected '" + std::string(name) + "', found " + describe(peek()));
  }
  return next();
}

Rational TokenCursor::number() {
  const Token& first = expect(Tok::number, "a number");
  auto value = parse_rational(first.text);
  if (!value) fail(ErrorKind::syntax, first, "malformed number " + describe(first));
  if (peek().type == Tok::slash && tokens_[pos_ + 1].type == Tok::number) {
    next();
    const Token& den_tok = next();
    auto den = parse_rational(den_tok.text);
    if (!den || sgn(*den) == 0) fail(ErrorKind::syntax, den_tok, "zero or malformed denominator");
    *value /= *den;
  }
  return *value;
}

void TokenCursor::fail(ErrorKind kind, const Token& at, const std::string& message) const {
  fail(kind, at.span, message);
}

void TokenCursor::fail(ErrorKind kind, SourceSpan span, const std::string& message) const {
  span.begin = std::min(span.begin, text_.size());
  span.end = std::min(std::max(span.end, span.begin), text_.size());
  throw ParseError(kind, span,
                   message + " at offset " + std::to_string(span.begin));
}

}  // namespace detail

namespace {

using detail::Tok;
using detail::Token;
using detail::TokenCursor;

// E "(" sign [number "*"] "t" "^" "a" ")"   -- returns the rate
Rational parse_atom_argument(TokenCursor& cur) {
  if (cur.peek().type == Tok::ident && cur.peek().text != "E") {
    cur.fail(ErrorKind::unknown_identifier, cur.peek(), "unknown identifier " + describe(cur.peek()));
  }
  cur.expect_ident("E");
  cur.expect(Tok::lparen, "'('");
  const SourceSpan begin = cur.peek().span;
  bool negative = false;
  if (cur.accept(Tok::minus)) {
    negative = true;
  } else {
    cur.accept(Tok::plus);
  }
  Rational rate = 1;
  if (cur.peek().type == Tok::number) {
    rate = cur.number();
    cur.expect(Tok::star, "'*'");
  }
  if (cur.peek().type == Tok::ident && cur.peek().text != "t") {
    cur.fail(ErrorKind::unknown_identifier, cur.peek(),
             "unknown identifier " + describe(cur.peek()) + " (the time variable is 't')");
  }
  cur.expect_ident("t");
  cur.expect(Tok::caret, "'^'");
  cur.expect_ident("a");
  const SourceSpan end = cur.peek().span;
  cur.expect(Tok::rparen, "')'");
  if (!negative || sgn(rate) <= 0) {
    cur.fail(ErrorKind::non_positive_rate, SourceSpan{begin.begin, end.begin},
             "decay atom E(-r*t^a) needs r > 0");
  }
  return rate;
}

enum class Context { expression, right_hand_side };

// Sum of atoms up to (not including) the stop token.
TimeExpr parse_atom_sum(TokenCursor& cur, const Rational& alpha, Tok stop, Context ctx) {
  std::vector<Atom> atoms;
  bool first = true;
  for (;;) {
    Rational sign = 1;
    if (cur.accept(Tok::minus)) {
      sign = -1;
    } else if (!cur.accept(Tok::plus) && !first) {
      break;
    }
    first = false;
    const Token& head = cur.peek();
    if (head.type == Tok::number) {
      const Rational c = cur.number();
      if (cur.accept(Tok::star)) {
        atoms.push_back(Atom{sign * c, parse_atom_argument(cur)});
      } else if (sgn(c) != 0) {
        cur.fail(ErrorKind::syntax, head,
                 "constant term " + describe(head) + " is not a decay atom E(-r*t^a)");
      }
    } else if (head.type == Tok::ident && head.text == "E") {
      atoms.push_back(Atom{sign, parse_atom_argument(cur)});
    } else if (head.type == Tok::ident) {
      if (ctx == Context::right_hand_side && (head.text == "y" || head.text == "Dy")) {
        cur.fail(ErrorKind::syntax, head,
                 "the unknown y may appear only on the left-hand side");
      }
      cur.fail(ErrorKind::unknown_identifier, head, "unknown identifier " + describe(head));
    } else {
      cur.fail(ErrorKind::syntax, head, "expected a term, found " + describe(head));
    }
    const Tok t = cur.peek().type;
    if (t != Tok::plus && t != Tok::minus) break;
  }
  if (cur.peek().type != stop && stop == Tok::semicolon && cur.peek().type == Tok::end) {
    cur.fail(ErrorKind::missing_initial_condition, cur.peek(),
             "missing initial condition (y(0)=... or Dy(0)=...)");
  }
  if (cur.peek().type != stop) {
    cur.fail(ErrorKind::syntax, cur.peek(), "unexpected " + describe(cur.peek()));
  }
  return TimeExpr(alpha, std::move(atoms));
}

}  // namespace

TimeExpr parse_expr(std::string_view text, const Rational& alpha) {
  require_valid_order(alpha);
  TokenCursor cur(text);
  if (cur.peek().type == Tok::end) cur.fail(ErrorKind::syntax, cur.peek(), "empty expression");
  return parse_atom_sum(cur, alpha, Tok::end, Context::expression);
}

OdeProblem parse_problem(std::string_view text, const Rational& alpha) {
  require_valid_order(alpha);
  TokenCursor cur(text);
  OdeProblem p;
  p.alpha = alpha;
  p.c2 = 0;
  p.c0 = 0;

  // lhs := term {(+|-) term},  term := [num "*"] "y" ["^(" [int] "a" ")"] ["(t)"]
  const SourceSpan lhs_begin = cur.peek().span;
  bool first = true;
  for (;;) {
    Rational sign = 1;
    if (cur.accept(Tok::minus)) {
      sign = -1;
    } else if (!cur.accept(Tok::plus) && !first) {
      break;
    }
    first = false;
    Rational coef = 1;
    if (cur.peek().type == Tok::number) {
      const Token& head = cur.peek();
      coef = cur.number();
      if (!cur.accept(Tok::star)) {
        cur.fail(ErrorKind::syntax, head, "left-hand side terms must multiply y");
      }
    }
    const Token& y = cur.peek();
    if (y.type != Tok::ident || y.text != "y") {
      if (y.type == Tok::ident) {
        cur.fail(ErrorKind::unknown_identifier, y, "unknown identifier " + describe(y));
      }
      cur.fail(ErrorKind::syntax, y, "expected 'y', found " + describe(y));
    }
    cur.next();
    long multiple = 0;
    if (cur.peek().type == Tok::caret) {
      const SourceSpan order_begin = cur.next().span;
      cur.expect(Tok::lparen, "'('");
      multiple = 1;
      if (cur.peek().type == Tok::number) {
        const Token& n = cur.next();
        auto v = parse_rational(n.text);
        if (!v || v->get_den() != 1 || !v->get_num().fits_slong_p()) {
          cur.fail(ErrorKind::unsupported_order, n, "derivative order must be an integer multiple of a");
        }
        multiple = v->get_num().get_si();
      }
      cur.expect_ident("a");
      const SourceSpan order_end = cur.expect(Tok::rparen, "')'").span;
      if (multiple != 2) {
        cur.fail(ErrorKind::unsupported_order, SourceSpan{order_begin.begin, order_end.end},
                 "only y^(2a) and y are supported (got order " + std::to_string(multiple) + "a)");
      }
    }
    if (cur.accept(Tok::lparen)) {
      cur.expect_ident("t");
      cur.expect(Tok::rparen, "')'");
    }
    (multiple == 2 ? p.c2 : p.c0) += sign * coef;
    const Tok t = cur.peek().type;
    if (t != Tok::plus && t != Tok::minus) break;
  }
  const SourceSpan lhs_end = cur.peek().span;
  cur.expect(Tok::equals, "'='");
  if (sgn(p.c2) == 0) {
    cur.fail(ErrorKind::unsupported_order, SourceSpan{lhs_begin.begin, lhs_end.begin},
             "equation needs a nonzero y^(2a) term");
  }

  if (cur.peek().type == Tok::end) {
    cur.fail(ErrorKind::syntax, cur.peek(), "missing right-hand side");
  }
  if (cur.peek().type == Tok::semicolon) cur.fail(ErrorKind::syntax, cur.peek(), "missing right-hand side");
  p.forcing = parse_atom_sum(cur, alpha, Tok::semicolon, Context::right_hand_side);
  cur.expect(Tok::semicolon, "';'");

  const Token& init = cur.peek();
  if (init.type == Tok::end) {
    cur.fail(ErrorKind::missing_initial_condition, init,
             "missing initial condition (y(0)=... or Dy(0)=...)");
  }
  if (init.type != Tok::ident || (init.text != "y" && init.text != "Dy")) {
    cur.fail(ErrorKind::syntax, init, "expected y(0) or Dy(0), found " + describe(init));
  }
  p.route = init.text == "y" ? TransformKind::sine : TransformKind::cosine;
  cur.next();
  cur.expect(Tok::lparen, "'('");
  const Token& zero = cur.expect(Tok::number, "0");
  if (parse_rational(zero.text) != Rational(0)) {
    cur.fail(ErrorKind::syntax, zero, "initial data must be given at t = 0");
  }
  cur.expect(Tok::rparen, "')'");
  cur.expect(Tok::equals, "'='");
  Rational sign = 1;
  if (cur.accept(Tok::minus)) {
    sign = -1;
  } else {
    cur.accept(Tok::plus);
  }
  p.initial = sign * cur.number();
  cur.expect(Tok::end, "end of input");
  return p;
}

}  // namespace fraxform
