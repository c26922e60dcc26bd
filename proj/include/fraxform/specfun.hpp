#pragma once

#include <cstddef>

namespace fraxform::specfun {

/// Truncation control for the entire series behind E_alpha, cos_alpha and
/// sin_alpha.
///
/// A result is accepted when its estimated absolute error (rounding growth
/// plus a rigorous tail bound) is at most tol * max(1, |value|). Arguments
/// with |argument| > domain_cap are refused outright.
struct EvalConfig {
  double tol = 1e-12;
  std::size_t max_terms = 4096;
  double domain_cap = 40.0;

  /// Throws invalid_argument unless 0 < tol < 1e-3, max_terms >= 16 and
  /// domain_cap > 0.
  void validate() const;
};

/// Gamma function (Lanczos, g = 7). Reflection handles x < 1/2.
/// Throws domain at non-positive integers, precision on overflow.
double gamma(double x);

/// ln Gamma(x) for x > 0 in extended precision. Stirling series after an
/// upward shift; independent of the Lanczos scheme used by gamma().
long double log_gamma(long double x);

/// E_alpha(u) = sum_k u^k / Gamma(1 + k alpha).
double mittag_leffler(double alpha, double u, const EvalConfig& cfg = {});

/// cos_alpha(v) = sum_k (-1)^k v^(2k) / Gamma(1 + 2k alpha).
double cos_alpha(double alpha, double v, const EvalConfig& cfg = {});

/// sin_alpha(v) = sum_k (-1)^k v^(2k+1) / Gamma(1 + (2k+1) alpha).
double sin_alpha(double alpha, double v, const EvalConfig& cfg = {});

}  // namespace fraxform::specfun
