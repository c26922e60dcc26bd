#include <gtest/gtest.h>

#include <string>

#include "fraxform/error.hpp"
#include "fraxform/parser.hpp"
#include "support/gen.hpp"

using namespace fraxform;

namespace {

const Rational kAlpha(9, 10);

ParseError parse_failure(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  } catch (const Error& e) {
    ADD_FAILURE() << "error without span: " << e.what();
    throw;
  }
  ADD_FAILURE() << "no error raised";
  return ParseError(ErrorKind::syntax, {}, "");
}

std::string random_junk(gen::Rng& rng, std::size_t len) {
  static const std::string alphabet = "Eyta*+-/^()=;0123456789.s Dbx\t#";
  std::string s;
  for (std::size_t i = 0; i < len; ++i) s += alphabet[rng.range(0, static_cast<long>(alphabet.size()) - 1)];
  return s;
}

// Splices fragments of valid inputs around so most mutants are nearly valid.
std::string mutate(gen::Rng& rng, std::string s) {
  const long ops = rng.range(1, 3);
  for (long i = 0; i < ops && !s.empty(); ++i) {
    const std::size_t pos = static_cast<std::size_t>(rng.range(0, static_cast<long>(s.size()) - 1));
    switch (rng.range(0, 2)) {
      case 0: s.erase(pos, 1); break;
      case 1: s.insert(pos, random_junk(rng, 1)); break;
      default: s[pos] = random_junk(rng, 1)[0]; break;
    }
  }
  return s;
}

}  // namespace

TEST(ParseExpr, Examples) {
  EXPECT_EQ(parse_expr("50*E(-2*t^a)", kAlpha), TimeExpr::atom(kAlpha, 50, 2));
  EXPECT_EQ(parse_expr("E(-3*t^a) + E(-3*t^a)", kAlpha), TimeExpr::atom(kAlpha, 2, 3));
  EXPECT_TRUE(parse_expr("0", kAlpha).is_zero());
  EXPECT_EQ(parse_expr("  -7/2*E(-0.5*t^a)-E(-t^a) ", kAlpha),
            TimeExpr(kAlpha, {{Rational(-7, 2), Rational(1, 2)}, {-1, 1}}));
  EXPECT_EQ(parse_expr("E(-3*t^a) - E(-3*t^a)", kAlpha), TimeExpr(kAlpha));
}

TEST(ParseExpr, WrongPowerPointsAtTheSymbol) {
  const auto e = parse_failure([] { parse_expr("E(-2*t^b)", kAlpha); });
  EXPECT_EQ(e.kind(), ErrorKind::syntax);
  EXPECT_EQ(e.span().begin, 7u);
  EXPECT_EQ(e.span().end, 8u);
}

TEST(ParseExpr, NonPositiveRates) {
  EXPECT_EQ(parse_failure([] { parse_expr("E(2*t^a)", kAlpha); }).kind(), ErrorKind::non_positive_rate);
  EXPECT_EQ(parse_failure([] { parse_expr("E(-0*t^a)", kAlpha); }).kind(), ErrorKind::non_positive_rate);
  EXPECT_EQ(parse_failure([] { parse_expr("E(+t^a)", kAlpha); }).kind(), ErrorKind::non_positive_rate);
}

TEST(ParseExpr, UnknownIdentifiers) {
  const auto e = parse_failure([] { parse_expr("3*exp(-2*t^a)", kAlpha); });
  EXPECT_EQ(e.kind(), ErrorKind::unknown_identifier);
  EXPECT_EQ(e.span().begin, 2u);
  EXPECT_EQ(e.span().end, 5u);
  EXPECT_EQ(parse_failure([] { parse_expr("E(-2*x^a)", kAlpha); }).kind(), ErrorKind::unknown_identifier);
}

TEST(ParseExpr, SyntaxErrors) {
  for (const char* bad : {"", "5", "E(-2*t^a", "E(-2*t^a))", "2E(-t^a)", "E(-2t^a)", "E(-2*t^a) +",
                          "E(-2*t^a) 3", "*E(-t^a)", "E(-1/0*t^a)", "$"}) {
    const auto e = parse_failure([&] { parse_expr(bad, kAlpha); });
    EXPECT_EQ(e.category(), ErrorCategory::parse) << bad;
  }
}

TEST(ParseExpr, RenderRoundTrip) {
  gen::Rng rng(83);
  for (int i = 0; i < 500; ++i) {
    const Rational alpha = gen::kAlphas[rng.range(0, 3)];
    const TimeExpr e = gen::expr(rng, alpha);
    const std::string text = to_string(e);
    EXPECT_EQ(parse_expr(text, alpha), e) << text;
    EXPECT_EQ(to_string(parse_expr(text, alpha)), text);
  }
}

TEST(ParseExpr, FuzzIsTotalAndSpansAreInBounds) {
  gen::Rng rng(89);
  std::vector<std::string> seeds{"50*E(-2*t^a)", "E(-3*t^a) + 7/2*E(-1/3*t^a)", "0",
                                 "-E(-t^a)-0.25*E(-4*t^a)"};
  for (int i = 0; i < 4000; ++i) {
    const std::string text = i % 2 ? random_junk(rng, static_cast<std::size_t>(rng.range(0, 40)))
                                   : mutate(rng, seeds[static_cast<std::size_t>(i) % seeds.size()]);
    try {
      const TimeExpr e = parse_expr(text, kAlpha);
      EXPECT_EQ(parse_expr(to_string(e), kAlpha), e) << text;
    } catch (const ParseError& err) {
      EXPECT_LE(err.span().begin, err.span().end) << text;
      EXPECT_LE(err.span().end, text.size()) << text;
      EXPECT_EQ(err.category(), ErrorCategory::parse) << text;
    }
  }
}

TEST(ParseProblem, WorkedExample) {
  const OdeProblem p = parse_problem("y^(2a) - 9*y = 50*E(-2*t^a); y(0)=1", kAlpha);
  EXPECT_EQ(p.c2, 1);
  EXPECT_EQ(p.c0, -9);
  EXPECT_EQ(p.forcing, TimeExpr::atom(kAlpha, 50, 2));
  EXPECT_EQ(p.initial, 1);
  EXPECT_EQ(p.route, TransformKind::sine);
  EXPECT_EQ(p.alpha, kAlpha);
}

TEST(ParseProblem, Normalization) {
  const OdeProblem p = parse_problem("2*y^(2a) - 8*y = 0; y(0)=3", kAlpha);
  EXPECT_EQ(p.c2, 2);
  EXPECT_EQ(p.c0, -8);
  EXPECT_TRUE(p.forcing.is_zero());
  EXPECT_EQ(p.initial, 3);
}

TEST(ParseProblem, CosineRouteAndLenientForms) {
  const OdeProblem p = parse_problem("-9*y(t) + y^(2a)(t) + y^(2a) = E(-t^a); Dy(0)=-7/2", kAlpha);
  EXPECT_EQ(p.c2, 2);
  EXPECT_EQ(p.c0, -9);
  EXPECT_EQ(p.route, TransformKind::cosine);
  EXPECT_EQ(p.initial, Rational(-7, 2));
}

TEST(ParseProblem, UnsupportedOrder) {
  EXPECT_EQ(parse_failure([] { parse_problem("y^(a) - y = 0; y(0)=1", kAlpha); }).kind(),
            ErrorKind::unsupported_order);
  EXPECT_EQ(parse_failure([] { parse_problem("y^(3a) - y = 0; y(0)=1", kAlpha); }).kind(),
            ErrorKind::unsupported_order);
  EXPECT_EQ(parse_failure([] { parse_problem("- 9*y = 0; y(0)=1", kAlpha); }).kind(),
            ErrorKind::unsupported_order);
  EXPECT_EQ(parse_failure([] { parse_problem("y^(2a) - y^(2a) - y = 0; y(0)=1", kAlpha); }).kind(),
            ErrorKind::unsupported_order);
}

TEST(ParseProblem, MissingInitialCondition) {
  for (const char* bad : {"y^(2a) - 9*y = 50*E(-2*t^a)", "y^(2a) - 9*y = 50*E(-2*t^a);",
                          "y^(2a) - 9*y = 0; "}) {
    EXPECT_EQ(parse_failure([&] { parse_problem(bad, kAlpha); }).kind(),
              ErrorKind::missing_initial_condition)
        << bad;
  }
}

TEST(ParseProblem, UnknownOnRightHandSide) {
  const auto e = parse_failure([] { parse_problem("y^(2a) = 9*y; y(0)=1", kAlpha); });
  EXPECT_EQ(e.category(), ErrorCategory::parse);
  EXPECT_EQ(e.span().begin, 11u);
}

TEST(ParseProblem, OtherSyntaxErrors) {
  for (const char* bad : {"y^(2a) - 9*y 50*E(-2*t^a); y(0)=1", "y^(2a) - 9*y = ; y(0)=1",
                          "y^(2a) - 9 = 0; y(0)=1", "y^(2a) - 9*y = 0; y(1)=1",
                          "y^(2a) - 9*y = 0; y(0)=", "y^(2a) - 9*y = 0; z(0)=1",
                          "y^(2a) - 9*y = 0; y(0)=1; y(0)=2"}) {
    const auto e = parse_failure([&] { parse_problem(bad, kAlpha); });
    EXPECT_EQ(e.category(), ErrorCategory::parse) << bad;
    EXPECT_LE(e.span().end, std::string(bad).size()) << bad;
  }
}

TEST(ParseProblem, RenderRoundTrip) {
  gen::Rng rng(97);
  for (int i = 0; i < 300; ++i) {
    OdeProblem p;
    p.alpha = gen::kAlphas[rng.range(0, 3)];
    p.c2 = gen::nonzero_rational(rng, 9, 4);
    p.c0 = gen::rational(rng, -9, 9, 4);
    p.forcing = rng.range(0, 3) ? gen::expr(rng, p.alpha, 3) : TimeExpr(p.alpha);
    p.route = rng.range(0, 1) ? TransformKind::sine : TransformKind::cosine;
    p.initial = gen::rational(rng, -9, 9, 4);
    const OdeProblem q = parse_problem(to_string(p), p.alpha);
    EXPECT_EQ(q.c2, p.c2) << to_string(p);
    EXPECT_EQ(q.c0, p.c0);
    EXPECT_EQ(q.forcing, p.forcing);
    EXPECT_EQ(q.route, p.route);
    EXPECT_EQ(q.initial, p.initial);
  }
}

TEST(ParseProblem, FuzzIsTotal) {
  gen::Rng rng(101);
  const std::string seed = "y^(2a) - 9*y = 50*E(-2*t^a); y(0)=1";
  for (int i = 0; i < 4000; ++i) {
    const std::string text = mutate(rng, seed);
    try {
      parse_problem(text, kAlpha);
    } catch (const ParseError& err) {
      EXPECT_LE(err.span().begin, err.span().end) << text;
      EXPECT_LE(err.span().end, text.size()) << text;
    }
  }
}

TEST(ParseSpectral, RendersReparse) {
  gen::Rng rng(103);
  for (int i = 0; i < 300; ++i) {
    const Rational alpha = gen::kAlphas[rng.range(0, 3)];
    const TimeExpr e = gen::expr(rng, alpha);
    for (auto kind : {TransformKind::sine, TransformKind::cosine}) {
      const SpectralExpr F = forward(e, kind);
      EXPECT_EQ(parse_spectral(to_string(F.value()), alpha, kind), F) << to_string(F.value());
    }
  }
}

TEST(ParseSpectral, FreeFormInput) {
  const Rational a(1, 2);
  const auto F = parse_spectral("22*s/(s^2+9) - 20*s/(s^2+4)", a, TransformKind::sine);
  EXPECT_EQ(F.value(), RationalS(PolyS(std::vector<Rational>{0, -92, 0, 2}), {4, 9}));
  const auto G = parse_spectral("1/((s^2+4)*(s^2+9))", a, TransformKind::cosine);
  EXPECT_EQ(G.value(), RationalS(PolyS(1), {4, 9}));
  const auto H = parse_spectral("(2*s)/(s*s+4) * (s^2+4)/(s^2+9)", a, TransformKind::sine);
  EXPECT_EQ(H.value(), RationalS(PolyS::monomial(1, 2), {9}));
  const auto K = parse_spectral("3/(2*s^2+8)", a, TransformKind::cosine);
  EXPECT_EQ(K.value(), RationalS(PolyS(Rational(3, 2)), {4}));
}

TEST(ParseSpectral, Rejections) {
  const Rational a(1, 2);
  auto kind_of = [&](const char* text, TransformKind k = TransformKind::sine) {
    try {
      parse_spectral(text, a, k);
    } catch (const Error& e) {
      return e.kind();
    }
    ADD_FAILURE() << text;
    return ErrorKind::syntax;
  };
  EXPECT_EQ(kind_of("1/(s^2+4)^2", TransformKind::cosine), ErrorKind::unsupported_multiplicity);
  EXPECT_EQ(kind_of("s/(s+1)"), ErrorKind::out_of_table);
  EXPECT_EQ(kind_of("s/(s^2-4)"), ErrorKind::out_of_table);
  EXPECT_EQ(kind_of("1/(s^2+4)"), ErrorKind::parity);
  EXPECT_EQ(kind_of("s/0"), ErrorKind::syntax);
  EXPECT_EQ(kind_of("w/(s^2+4)"), ErrorKind::unknown_identifier);
  EXPECT_EQ(kind_of("((((s"), ErrorKind::syntax);
  EXPECT_EQ(kind_of(std::string(500, '(').c_str()), ErrorKind::syntax);
}
