#include <gtest/gtest.h>

#include "fraxform/error.hpp"
#include "fraxform/rational.hpp"

using namespace fraxform;

TEST(Rational, ParsesIntegersDecimalsAndFractions) {
  EXPECT_EQ(*parse_rational("3"), Rational(3));
  EXPECT_EQ(*parse_rational("-7/2"), Rational(-7, 2));
  EXPECT_EQ(*parse_rational("0.9"), Rational(9, 10));
  EXPECT_EQ(*parse_rational("+0.25"), Rational(1, 4));
  EXPECT_EQ(*parse_rational("12/8"), Rational(3, 2));
  EXPECT_EQ(*parse_rational(".5"), Rational(1, 2));
}

TEST(Rational, RejectsMalformedLiterals) {
  for (const char* bad : {"", "-", "1/0", "1.2.3", "a", "1/", "/2", "1 /2", "0x10", "1e3"}) {
    EXPECT_FALSE(parse_rational(bad).has_value()) << bad;
  }
}

TEST(Rational, CanonicalText) {
  EXPECT_EQ(to_string(Rational(14, 4)), "7/2");
  EXPECT_EQ(to_string(Rational(-3)), "-3");
}

TEST(Rational, ExactRootsAndPowers) {
  EXPECT_EQ(*exact_sqrt(Rational(9, 4)), Rational(3, 2));
  EXPECT_FALSE(exact_sqrt(Rational(2)).has_value());
  EXPECT_FALSE(exact_sqrt(Rational(-4)).has_value());
  EXPECT_EQ(*exact_power(Rational(16), Rational(3, 4)), Rational(8));
  EXPECT_EQ(*exact_power(Rational(4), Rational(-1, 2)), Rational(1, 2));
  EXPECT_FALSE(exact_power(Rational(2), Rational(1, 2)).has_value());
  EXPECT_EQ(rational_pow(Rational(2, 3), 3), Rational(8, 27));
}

TEST(Rational, OrderValidation) {
  EXPECT_NO_THROW(require_valid_order(Rational(1)));
  EXPECT_NO_THROW(require_valid_order(Rational(1, 100)));
  EXPECT_THROW(require_valid_order(Rational(0)), Error);
  EXPECT_THROW(require_valid_order(Rational(11, 10)), Error);
}
