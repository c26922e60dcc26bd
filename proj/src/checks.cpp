#include "fraxform/checks.hpp"

#include <cmath>
#include <numbers>

#include "fraxform/error.hpp"
#include "fraxform/oracle/compare.hpp"
#include "fraxform/transform.hpp"

namespace fraxform {

namespace {

void require_classical(const TimeExpr& e, const char* what) {
  if (e.alpha() != 1) {
    throw Error(ErrorKind::unsupported_semantics,
                std::string(what) + " has numeric meaning only at alpha = 1 (got alpha = " +
                    to_string(e.alpha()) + ")");
  }
}

IdentityCheck finish(std::string name, double lhs, double rhs, double tolerance) {
  const double diff = std::fabs(lhs - rhs);
  return {std::move(name), lhs, rhs, diff, tolerance, diff <= tolerance};
}

}  // namespace

IdentityCheck convolution_identity_check(const TimeExpr& f, const TimeExpr& g, double x,
                                         TransformKind kind, const oracle::QuadratureConfig& cfg,
                                         double tolerance) {
  require_classical(f, "convolution identity");
  require_classical(g, "convolution identity");
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw Error(ErrorKind::invalid_argument, "convolution identity needs finite x >= 0");
  }

  const RationalS fs = forward(f, kind).value();
  const RationalS gs = forward(g, kind).value();
  const oracle::Integrand spectral = [&](double w) { return fs.eval(w) * gs.eval(w); };
  const double lhs = oracle::quad_oscillatory(spectral, x, TransformKind::cosine, cfg).value;

  const oracle::Integrand fc = oracle::classical_function(f);
  const oracle::Integrand gc = oracle::classical_function(g);
  const bool sine = kind == TransformKind::sine;
  // Odd extension for the sine kind: g(u - x) = -g(x - u) when u < x.
  const oracle::Integrand inner = [&](double u) {
    double shifted;
    if (u >= x) {
      shifted = gc(u - x);
    } else {
      shifted = sine ? -gc(x - u) : gc(x - u);
    }
    return fc(u) * (gc(x + u) + shifted);
  };
  // The integrand has a kink at u = x.
  double time_side = oracle::quad_semi_infinite(inner, x, cfg).value;
  if (x > 0.0) time_side += oracle::quad_finite(inner, 0.0, x, cfg).value;
  const double rhs = std::numbers::pi * time_side;

  return finish(std::string("convolution/") + std::string(to_string(kind)), lhs, rhs, tolerance);
}

IdentityCheck parseval_check(const TimeExpr& f, TransformKind kind,
                             const oracle::QuadratureConfig& cfg, double tolerance) {
  require_classical(f, "Parseval relation");
  const RationalS fs = forward(f, kind).value();
  const oracle::Integrand energy = [&](double w) {
    const double v = fs.eval(w);
    return v * v;
  };
  const double lhs = oracle::quad_semi_infinite(energy, cfg).value;
  const oracle::Integrand fc = oracle::classical_function(f);
  const oracle::Integrand square = [&](double t) {
    const double v = fc(t);
    return v * v;
  };
  const double rhs = 2.0 * std::numbers::pi * oracle::quad_semi_infinite(square, cfg).value;
  return finish(std::string("parseval/") + std::string(to_string(kind)), lhs, rhs, tolerance);
}

}  // namespace fraxform
