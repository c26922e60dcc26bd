#pragma once

#include <span>

#include "fraxform/atoms.hpp"
#include "fraxform/kind.hpp"
#include "fraxform/oracle/quadrature.hpp"

// Bindings between the symbolic engine and the classical oracle.
namespace fraxform::oracle {

/// t -> sum coef * exp(-rate t), evaluated with std::exp. Requires alpha = 1;
/// negative t is allowed (classical analytic continuation).
Integrand classical_function(const TimeExpr& e);

/// max over the grid of |forward(e, kind) at s = omega - classical_transform|.
/// Requires alpha = 1 (unsupported_semantics otherwise).
double compare_engine_oracle(const TimeExpr& e, TransformKind kind,
                             std::span<const double> omega_grid,
                             const QuadratureConfig& cfg = {});

}  // namespace fraxform::oracle
