#include "fraxform/odesolve.hpp"

#include <algorithm>
#include <cmath>

#include "fraxform/error.hpp"
#include "fraxform/oracle/compare.hpp"
#include "fraxform/transform.hpp"

namespace fraxform {

namespace {

// Appends "c*symbol" to a signed sum; symbol may be empty for constants.
void append_term(std::string& out, const Rational& c, const std::string& symbol) {
  if (sgn(c) == 0) return;
  const bool negative = sgn(c) < 0;
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  const Rational mag = abs(c);
  if (symbol.empty()) {
    out += to_string(mag);
  } else {
    if (mag != 1) out += to_string(mag) + "*";
    out += symbol;
  }
}

std::string join_sum(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (p == "0") continue;
    if (out.empty()) {
      out = p;
    } else if (p.front() == '-') {
      out += " - " + p.substr(1);
    } else {
      out += " + " + p;
    }
  }
  return out.empty() ? "0" : out;
}

std::string lhs_text(const OdeProblem& p) {
  std::string out;
  append_term(out, p.c2, "y^(2a)");
  append_term(out, p.c0, "y");
  return out.empty() ? "0" : out;
}

std::string initial_text(const OdeProblem& p) {
  return (p.route == TransformKind::sine ? "y(0)=" : "Dy(0)=") + to_string(p.initial);
}

}  // namespace

std::string to_string(const OdeProblem& p) {
  return lhs_text(p) + " = " + to_string(p.forcing) + "; " + initial_text(p);
}

SolveReport solve(const OdeProblem& p) {
  require_valid_order(p.alpha);
  if (sgn(p.c2) == 0) {
    throw Error(ErrorKind::invalid_argument, "leading coefficient of y^(2a) must be nonzero");
  }
  if (p.forcing.alpha() != p.alpha) {
    throw Error(ErrorKind::alpha_mismatch, "forcing term has a different fractal order");
  }
  const bool sine = p.route == TransformKind::sine;
  const Rational q = -p.c0 / p.c2;
  if (sgn(q) <= 0) {
    throw Error(ErrorKind::out_of_table,
                "characteristic factor s^2+" + to_string(q) +
                    " has no decaying table inverse (need -c0/c2 > 0)");
  }
  const SpectralExpr forcing = forward(p.forcing, p.route);
  const auto& poles = forcing.value().factors();
  if (std::binary_search(poles.begin(), poles.end(), q)) {
    throw Error(ErrorKind::resonance, "forcing pole coincides with the characteristic factor s^2+" +
                                          to_string(q) + " (repeated pole)");
  }
  const auto root = exact_sqrt(q);
  if (!root) {
    throw Error(ErrorKind::irrational_rate,
                "characteristic rate sqrt(" + to_string(q) + ") is not rational");
  }

  SolveReport report;
  const std::string equation = lhs_text(p) + " = " + to_string(p.forcing);

  // Transform of y^(2 alpha) with Y standing for the unknown transform:
  //   sine:   -s^2 Y + 2 s y(0)        cosine: -s^2 Y - 2 y^(alpha)(0)
  const PolyS init_poly = sine ? PolyS::monomial(1, 2 * p.initial) : PolyS(Rational(-2 * p.initial));
  std::string transformed;
  append_term(transformed, -p.c2, "s^2*Y");
  append_term(transformed, p.c0, "Y");
  report.transformed_equation =
      join_sum({transformed, to_string(PolyS(p.c2) * init_poly)}) + " = " + to_string(forcing);

  // c2 (-(s^2 + q) Y + init) = F  =>  (s^2 + q) Y = -F / c2 + init
  const RationalS rhs_forcing = RationalS(PolyS(Rational(-1 / p.c2))) * forcing.value();
  const RationalS rhs = rhs_forcing + RationalS(init_poly);
  const std::string collected = "(" + to_string(PolyS::quadratic(q)) + ")*Y = " +
                                join_sum({to_string(rhs_forcing), to_string(init_poly)});
  report.spectral_solution = rhs.divide_by_quadratic(q);
  const SpectralExpr spectral(p.alpha, p.route, report.spectral_solution);

  report.partial_fractions = partial_fractions(report.spectral_solution);
  std::vector<std::string> pf_text;
  for (const auto& t : report.partial_fractions) pf_text.push_back(to_string(t));
  const std::string pf_sum = join_sum(pf_text);

  report.solution = inverse(spectral);
  const ResidualReport check = verify(p, report.solution);
  report.residual_exact = check.residual_exact;
  report.initial_condition_reproduced = check.initial_condition_reproduced;
  report.residual_numeric_alpha1 = check.residual_numeric_alpha1;

  const std::string y_text = "Y = " + to_string(report.spectral_solution);
  report.steps = {
      {"transform", sine ? "3.7" : "3.5", equation, report.transformed_equation},
      {"collect", "", report.transformed_equation, collected},
      {"solve-algebraic", "", collected, y_text},
      {"partial-fractions", "", y_text, "Y = " + pf_sum},
      {"inverse-table", sine ? "2.13" : "2.14", "Y = " + pf_sum,
       "y(t) = " + to_string(report.solution)},
      {"residual", "", "y(t) = " + to_string(report.solution),
       "c2*y^(2a) + c0*y - forcing = " + to_string(report.residual_exact)},
  };
  return report;
}

ResidualReport verify(const OdeProblem& p, const TimeExpr& y, std::span<const double> grid) {
  ResidualReport out;
  out.residual_exact = expr_scale(p.c2, expr_derivative(y, DerivativeOrder::two_alpha)) +
                       expr_scale(p.c0, y) - p.forcing;
  const Rational datum =
      p.route == TransformKind::sine ? expr_value_at_zero(y) : expr_alpha_derivative_at_zero(y);
  out.initial_condition_reproduced = datum == p.initial;

  if (p.alpha == 1 && y.alpha() == 1) {
    const auto yc = oracle::classical_function(y);
    const auto fc = oracle::classical_function(p.forcing);
    double max_rate = 1.0;
    for (const auto& a : y.atoms()) max_rate = std::max(max_rate, to_double(a.rate));
    const double h = 2.5e-3 / max_rate;
    const double c2 = to_double(p.c2);
    const double c0 = to_double(p.c0);
    double worst = 0.0;
    for (double t : grid) {
      const double d2 = (-yc(t + 2 * h) + 16 * yc(t + h) - 30 * yc(t) + 16 * yc(t - h) -
                         yc(t - 2 * h)) /
                        (12 * h * h);
      worst = std::max(worst, std::fabs(c2 * d2 + c0 * yc(t) - fc(t)));
    }
    out.residual_numeric_alpha1 = worst;
  }
  return out;
}

}  // namespace fraxform
