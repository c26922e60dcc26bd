#include "fraxform/oracle/compare.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fraxform/error.hpp"
#include "fraxform/transform.hpp"

namespace fraxform::oracle {

namespace {

void require_classical(const TimeExpr& e) {
  if (e.alpha() != 1) {
    throw Error(ErrorKind::unsupported_semantics,
                "numeric integral semantics exist only at alpha = 1 (got alpha = " +
                    to_string(e.alpha()) + ")");
  }
}

}  // namespace

Integrand classical_function(const TimeExpr& e) {
  require_classical(e);
  std::vector<std::pair<double, double>> terms;
  for (const auto& a : e.atoms()) terms.emplace_back(to_double(a.coef), to_double(a.rate));
  return [terms = std::move(terms)](double t) {
    double sum = 0.0;
    for (const auto& [c, r] : terms) sum += c * std::exp(-r * t);
    return sum;
  };
}

double compare_engine_oracle(const TimeExpr& e, TransformKind kind,
                             std::span<const double> omega_grid, const QuadratureConfig& cfg) {
  require_classical(e);
  const SpectralExpr engine = forward(e, kind);
  const Integrand f = classical_function(e);
  double worst = 0.0;
  for (double omega : omega_grid) {
    const double symbolic = engine.value().eval(omega);
    const double numeric = classical_transform(f, omega, kind, cfg);
    worst = std::max(worst, std::fabs(symbolic - numeric));
  }
  return worst;
}

}  // namespace fraxform::oracle
