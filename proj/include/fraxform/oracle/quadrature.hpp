#pragma once

#include <cstddef>
#include <functional>

#include "fraxform/kind.hpp"

// Classical (alpha = 1) numerical integration. Nothing in here knows about the
// symbolic engine; integrands arrive as plain callables.
namespace fraxform::oracle {

struct QuadratureConfig {
  double abs_tol = 1e-11;
  double rel_tol = 1e-11;
  std::size_t max_subdivisions = 5000;
  /// Split point for semi-infinite ranges: [0, tail_cut] directly, the rest
  /// through x = tail_cut / t.
  double tail_cut = 8.0;

  /// Tolerances in (0, 1e-2], max_subdivisions >= 50, tail_cut > 0.
  void validate() const;
};

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (7/15) on [a, b]. The reported error is the sum of
/// per-interval |K15 - G7| differences. Throws accuracy when the budget runs out.
QuadResult quad_finite(const Integrand& f, double a, double b, const QuadratureConfig& cfg = {});

/// Integral over [lower, inf) for integrands with exponential or O(x^-2) tails.
QuadResult quad_semi_infinite(const Integrand& f, double lower, const QuadratureConfig& cfg = {});
inline QuadResult quad_semi_infinite(const Integrand& f, const QuadratureConfig& cfg = {}) {
  return quad_semi_infinite(f, 0.0, cfg);
}

/// Integral over [0, inf) of f(x) cos(omega x) or f(x) sin(omega x). The range
/// is cut at the kernel's zeros and the alternating partial sums are
/// accelerated with Wynn's epsilon algorithm.
QuadResult quad_oscillatory(const Integrand& f, double omega, TransformKind kernel,
                            const QuadratureConfig& cfg = {});

/// 2 * integral_0^inf f(x) {cos, sin}(omega x) dx, omega >= 0.
double classical_transform(const Integrand& f, double omega, TransformKind kind,
                           const QuadratureConfig& cfg = {});

}  // namespace fraxform::oracle
