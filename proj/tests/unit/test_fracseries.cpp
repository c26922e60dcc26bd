#include <gtest/gtest.h>

#include <cmath>

#include "fraxform/error.hpp"
#include "fraxform/fracseries.hpp"
#include "support/gen.hpp"

using namespace fraxform;

namespace {

FractalSeries random_series(gen::Rng& rng, const Rational& alpha, long max_len) {
  std::vector<Rational> c;
  const long n = rng.range(1, max_len);
  for (long i = 0; i < n; ++i) c.push_back(gen::rational(rng, -9, 9, 4));
  return FractalSeries(alpha, c);
}

}  // namespace

TEST(FractalSeries, MonomialDerivativeRule) {
  const Rational alpha(3, 4);
  const auto d = lf_derivative(FractalSeries::monomial(alpha, 3, 1));
  // Gamma(1 + 9/4) / Gamma(1 + 6/4)
  const GammaCoeff expect = GammaCoeff::gamma_one_plus(Rational(9, 4)) *
                            GammaCoeff::gamma_one_plus(Rational(3, 2)).reciprocal();
  EXPECT_EQ(d.coeff(2), expect);
  EXPECT_TRUE(d.coeff(0).is_zero());
  EXPECT_NEAR(d.coeff(2).to_double(), std::tgamma(1 + 2.25) / std::tgamma(1 + 1.5), 1e-13);
}

TEST(FractalSeries, ConstantsDifferentiateToZero) {
  EXPECT_TRUE(lf_derivative(FractalSeries(Rational(1, 2), {Rational(5)})).is_zero());
}

TEST(FractalSeries, MittagLefflerEigenPropertyIsExact) {
  for (const auto& alpha : gen::kAlphas) {
    for (const char* rate : {"1", "2", "7/3"}) {
      const Rational a = *parse_rational(rate);
      const auto f = FractalSeries::mittag_leffler(alpha, 1, a, 24);
      const auto lhs = lf_derivative(f);
      const auto rhs = series_scale(-a, FractalSeries::mittag_leffler(alpha, 1, a, 23));
      EXPECT_EQ(lhs, rhs) << to_string(alpha) << " " << rate;
    }
  }
}

TEST(FractalSeries, EvaluationMatchesMittagLeffler) {
  for (const auto& alpha : gen::kAlphas) {
    const auto f = FractalSeries::mittag_leffler(alpha, 1, 2, 64);
    for (double x : {0.0, 0.1, 0.4, 0.6}) {
      const double expect = specfun::mittag_leffler(alpha.get_d(), -2.0 * std::pow(x, alpha.get_d()));
      EXPECT_NEAR(series_eval(f, x), expect, 1e-12) << to_string(alpha) << " " << x;
    }
  }
}

TEST(FractalSeries, EvaluationRefusesWhenTheBoundIsTooLoose) {
  // At x = 0.9 the rigorous Horner bound exceeds 1e-12 for alpha = 1/2; a looser
  // tolerance is accepted and then honoured.
  const Rational alpha(1, 2);
  const auto f = FractalSeries::mittag_leffler(alpha, 1, 2, 64);
  const double expect = specfun::mittag_leffler(0.5, -2.0 * std::sqrt(0.9));
  try {
    EXPECT_NEAR(series_eval(f, 0.9), expect, 1e-12);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::precision);
  }
  specfun::EvalConfig loose;
  loose.tol = 1e-10;
  EXPECT_NEAR(series_eval(f, 0.9, loose), expect, 1e-10);
}

TEST(FractalSeries, IntegralOfDerivativeRecoversIncrement) {
  gen::Rng rng(5);
  for (const auto& alpha : gen::kAlphas) {
    for (int i = 0; i < 20; ++i) {
      const auto f = random_series(rng, alpha, 8);
      const double lo = 0.3 * rng.unit();
      const double hi = lo + rng.unit();
      const double lhs = lf_integral(lf_derivative(f), lo, hi);
      const double rhs = series_eval(f, hi) - series_eval(f, lo);
      EXPECT_NEAR(lhs, rhs, 1e-10 * std::max(1.0, std::fabs(rhs)));
    }
  }
}

TEST(FractalSeries, IntegralOfConstantAtOrderOne) {
  // (1 / Gamma(2)) int_0^b 1 dx = b
  EXPECT_NEAR(lf_integral(FractalSeries(Rational(1), {Rational(1)}), 2.5), 2.5, 1e-15);
}

TEST(FractalSeries, IntegralOfConstantAtHalfOrder) {
  // x^0 -> Gamma(1) / Gamma(3/2) b^(1/2)
  const double got = lf_integral(FractalSeries(Rational(1, 2), {Rational(1)}), 4.0);
  EXPECT_NEAR(got, 2.0 / std::tgamma(1.5), 1e-14);
}

TEST(FractalSeries, RingAxioms) {
  gen::Rng rng(9);
  const Rational alpha(3, 4);
  for (int i = 0; i < 60; ++i) {
    const auto a = random_series(rng, alpha, 6);
    const auto b = random_series(rng, alpha, 6);
    const auto c = random_series(rng, alpha, 6);
    EXPECT_EQ(series_add(a, b), series_add(b, a));
    EXPECT_EQ(series_mul(a, b), series_mul(b, a));
    EXPECT_EQ(series_mul(series_mul(a, b), c), series_mul(a, series_mul(b, c)));
    EXPECT_EQ(series_mul(a, series_add(b, c)), series_add(series_mul(a, b), series_mul(a, c)));
  }
}

TEST(FractalSeries, ProductEvaluatesToProductOfValues) {
  gen::Rng rng(13);
  const Rational alpha(1, 2);
  for (int i = 0; i < 30; ++i) {
    const auto a = random_series(rng, alpha, 5);
    const auto b = random_series(rng, alpha, 5);
    const double x = 0.8 * rng.unit();
    const double expect = series_eval(a, x) * series_eval(b, x);
    EXPECT_NEAR(series_eval(series_mul(a, b), x), expect, 1e-11 * std::max(1.0, std::fabs(expect)));
  }
}

TEST(FractalSeries, OrderMismatchIsRejected) {
  const FractalSeries a(Rational(1, 2), {Rational(1)});
  const FractalSeries b(Rational(1, 3), {Rational(1)});
  EXPECT_THROW(series_add(a, b), Error);
  EXPECT_THROW(series_mul(a, b), Error);
}

TEST(FractalSeries, NegativeArgumentIsRejected) {
  const FractalSeries a(Rational(1, 2), {Rational(1), Rational(2)});
  EXPECT_THROW(series_eval(a, -1.0), Error);
  EXPECT_THROW(lf_integral(a, 2.0, 1.0), Error);
}
