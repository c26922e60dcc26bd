#pragma once

#include <string>

#include "fraxform/atoms.hpp"
#include "fraxform/kind.hpp"
#include "fraxform/oracle/quadrature.hpp"

namespace fraxform {

/// Numerically evaluated identity: both sides, their gap and the verdict.
struct IdentityCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double absdiff = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

inline constexpr double kIdentityTolerance = 1e-6;

/// Convolution identity at alpha = 1, transform side from the engine's
/// rational forms, time side from the classical functions.
///   cosine: int_0^inf F_c G_c cos(w x) dw = pi int_0^inf f(u) [g(x+u) + g(|x-u|)] du
///   sine:   int_0^inf F_s G_s cos(w x) dw = pi int_0^inf f(u) [g(u+x) + g(u-x)] du
/// with g extended as an odd function for the sine kind.
/// Throws unsupported_semantics for alpha != 1.
IdentityCheck convolution_identity_check(const TimeExpr& f, const TimeExpr& g, double x,
                                         TransformKind kind,
                                         const oracle::QuadratureConfig& cfg = {},
                                         double tolerance = kIdentityTolerance);

/// int_0^inf F(w)^2 dw = 2 pi int_0^inf f(x)^2 dx at alpha = 1.
IdentityCheck parseval_check(const TimeExpr& f, TransformKind kind,
                             const oracle::QuadratureConfig& cfg = {},
                             double tolerance = kIdentityTolerance);

}  // namespace fraxform
