#pragma once

#include <cstddef>
#include <vector>

#include "fraxform/gamma_coeff.hpp"
#include "fraxform/rational.hpp"
#include "fraxform/specfun.hpp"

namespace fraxform {

inline constexpr std::size_t kDefaultSeriesOrder = 64;

/// Truncated fractal power series sum_{k=0..K} c_k x^(k alpha) in the
/// unnormalized basis x^(k alpha). Terms above the truncation order K are
/// unknown, not zero. Coefficients are exact; trailing zeros are trimmed.
class FractalSeries {
 public:
  FractalSeries(Rational alpha, std::vector<GammaCoeff> coeffs, std::size_t order);
  /// Rational coefficients; the order is coeffs.size() - 1.
  FractalSeries(Rational alpha, const std::vector<Rational>& coeffs);

  static FractalSeries zero(Rational alpha, std::size_t order = 0);
  static FractalSeries monomial(Rational alpha, std::size_t k, const Rational& c);
  /// K-truncated series of coef * E_alpha(-rate x^alpha):
  /// c_k = coef (-rate)^k / Gamma(1 + k alpha).
  static FractalSeries mittag_leffler(Rational alpha, const Rational& coef,
                                      const Rational& rate,
                                      std::size_t order = kDefaultSeriesOrder);

  const Rational& alpha() const { return alpha_; }
  std::size_t order() const { return order_; }
  /// c_k, zero beyond the stored coefficients.
  GammaCoeff coeff(std::size_t k) const;
  const std::vector<GammaCoeff>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  friend bool operator==(const FractalSeries& a, const FractalSeries& b);

 private:
  void trim();

  Rational alpha_;
  std::size_t order_;
  std::vector<GammaCoeff> coeffs_;
};

FractalSeries series_add(const FractalSeries& a, const FractalSeries& b);
FractalSeries series_scale(const Rational& c, const FractalSeries& a);
/// Cauchy product truncated at min(K_a + K_b, cap).
FractalSeries series_mul(const FractalSeries& a, const FractalSeries& b,
                         std::size_t cap = kDefaultSeriesOrder);

/// Local fractional derivative of order alpha, term by term:
/// x^(k alpha) -> Gamma(1 + k alpha) / Gamma(1 + (k-1) alpha) x^((k-1) alpha),
/// constants -> 0. Output order is K - 1.
FractalSeries lf_derivative(const FractalSeries& a);

/// (1 / Gamma(1 + alpha)) * integral over [0, b] of a(x) (dx)^alpha, using
/// x^(k alpha) -> Gamma(1 + k alpha) / Gamma(1 + (k+1) alpha) b^((k+1) alpha).
double lf_integral(const FractalSeries& a, double b, const specfun::EvalConfig& cfg = {});

/// Same operator over [lo, hi], 0 <= lo <= hi.
double lf_integral(const FractalSeries& a, double lo, double hi,
                   const specfun::EvalConfig& cfg = {});

/// Horner evaluation in X = x^alpha, x >= 0.
double series_eval(const FractalSeries& a, double x, const specfun::EvalConfig& cfg = {});

}  // namespace fraxform
