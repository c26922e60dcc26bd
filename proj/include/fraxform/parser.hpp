#pragma once

#include <string_view>

#include "fraxform/atoms.hpp"
#include "fraxform/odesolve.hpp"
#include "fraxform/transform.hpp"

namespace fraxform {

/// Sum of decay atoms, e.g. "50*E(-2*t^a) - 7/2*E(-3*t^a)" or "0". The symbol
/// `a` stands for the fractal order, bound to `alpha`. Numbers are exact
/// (integers, decimals, p/q).
TimeExpr parse_expr(std::string_view text, const Rational& alpha);

/// "y^(2a) - 9*y = 50*E(-2*t^a); y(0)=1". `Dy(0)=v` selects the cosine route.
OdeProblem parse_problem(std::string_view text, const Rational& alpha);

/// Rational function of s whose denominators are products of (s^2+q)
/// factors, e.g. "(2*s)/((s^2+4)*(s^2+9))" or "22*s/(s^2+9) - 20*s/(s^2+4)".
SpectralExpr parse_spectral(std::string_view text, const Rational& alpha, TransformKind kind);

}  // namespace fraxform
