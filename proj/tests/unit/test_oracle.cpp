#include <gtest/gtest.h>

#include <cmath>

#include "fraxform/error.hpp"
#include "fraxform/oracle/quadrature.hpp"

using namespace fraxform;
using namespace fraxform::oracle;

namespace {

struct Case {
  const char* name;
  Integrand f;
  double a;
  double b;  // inf for semi-infinite
  double exact;
};

}  // namespace

TEST(Quadrature, AnalyticIntegrals) {
  const double inf = INFINITY;
  const Case cases[] = {
      {"x^2 on [0,1]", [](double x) { return x * x; }, 0, 1, 1.0 / 3},
      {"sin on [0,pi]", [](double x) { return std::sin(x); }, 0, M_PI, 2},
      {"sqrt on [0,1]", [](double x) { return std::sqrt(x); }, 0, 1, 2.0 / 3},
      {"log on [0,1]", [](double x) { return std::log(x); }, 0, 1, -1},
      {"1/(1+x^2) on [-1,1]", [](double x) { return 1 / (1 + x * x); }, -1, 1, M_PI / 2},
      {"exp(-x) on [0,inf)", [](double x) { return std::exp(-x); }, 0, inf, 1},
      {"x exp(-x) on [0,inf)", [](double x) { return x * std::exp(-x); }, 0, inf, 1},
      {"exp(-x^2) on [0,inf)", [](double x) { return std::exp(-x * x); }, 0, inf, std::sqrt(M_PI) / 2},
      {"1/(1+x^2) on [0,inf)", [](double x) { return 1 / (1 + x * x); }, 0, inf, M_PI / 2},
      {"exp(-x) on [2,inf)", [](double x) { return std::exp(-x); }, 2, inf, std::exp(-2.0)},
      {"1/(x^2) on [1,inf)", [](double x) { return 1 / (x * x); }, 1, inf, 1},
  };
  for (const auto& c : cases) {
    const QuadResult r = std::isinf(c.b) ? quad_semi_infinite(c.f, c.a) : quad_finite(c.f, c.a, c.b);
    EXPECT_NEAR(r.value, c.exact, 1e-10) << c.name;
    // Honest error: the estimate bounds the true error up to rounding.
    EXPECT_LE(std::fabs(r.value - c.exact), std::max(10 * r.error_estimate, 1e-14)) << c.name;
  }
}

TEST(Quadrature, OscillatoryTransforms) {
  for (double w : {0.5, 1.0, 2.0, 5.0}) {
    // int_0^inf exp(-x) cos(wx) = 1/(1+w^2); sin: w/(1+w^2)
    const auto e = [](double x) { return std::exp(-x); };
    EXPECT_NEAR(quad_oscillatory(e, w, TransformKind::cosine).value, 1 / (1 + w * w), 1e-10);
    EXPECT_NEAR(quad_oscillatory(e, w, TransformKind::sine).value, w / (1 + w * w), 1e-10);
    // int_0^inf cos(wx)/(1+x^2) = (pi/2) exp(-w)
    EXPECT_NEAR(quad_oscillatory([](double x) { return 1 / (1 + x * x); }, w, TransformKind::cosine).value,
                M_PI / 2 * std::exp(-w), 1e-9);
    // int_0^inf x sin(wx)/(1+x^2) = (pi/2) exp(-w)
    EXPECT_NEAR(quad_oscillatory([](double x) { return x / (1 + x * x); }, w, TransformKind::sine).value,
                M_PI / 2 * std::exp(-w), 1e-8);
  }
}

TEST(Quadrature, DirichletIntegral) {
  // int_0^inf sin(x)/x = pi/2; slowly decaying, relies on the acceleration
  const auto r = quad_oscillatory([](double x) { return x == 0 ? 1.0 : 1.0 / x; }, 1.0, TransformKind::sine);
  EXPECT_NEAR(r.value, M_PI / 2, 1e-9);
}

TEST(Quadrature, ZeroFrequency) {
  const auto e = [](double x) { return std::exp(-x); };
  EXPECT_EQ(quad_oscillatory(e, 0.0, TransformKind::sine).value, 0.0);
  EXPECT_NEAR(quad_oscillatory(e, 0.0, TransformKind::cosine).value, 1.0, 1e-12);
}

TEST(Quadrature, ClassicalTransformIsTwiceTheIntegral) {
  const auto e = [](double x) { return std::exp(-2 * x); };
  EXPECT_NEAR(classical_transform(e, 1.0, TransformKind::cosine), 2 * 2.0 / 5.0, 1e-10);
  EXPECT_NEAR(classical_transform(e, 1.0, TransformKind::sine), 2 * 1.0 / 5.0, 1e-10);
}

TEST(Quadrature, BudgetExhaustionIsReported) {
  QuadratureConfig cfg;
  cfg.max_subdivisions = 50;
  cfg.abs_tol = cfg.rel_tol = 1e-14;
  try {
    quad_finite([](double x) { return std::sin(1 / x); }, 0.0, 1.0, cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::accuracy);
  }
}

TEST(Quadrature, ConfigValidation) {
  QuadratureConfig cfg;
  cfg.abs_tol = 0.0;
  EXPECT_THROW(cfg.validate(), Error);
  cfg = {};
  cfg.max_subdivisions = 3;
  EXPECT_THROW(cfg.validate(), Error);
  EXPECT_THROW(quad_oscillatory([](double) { return 1.0; }, -1.0, TransformKind::sine), Error);
}
