#include "fraxform/cli/report.hpp"

#include <charconv>
#include <cmath>

namespace fraxform::cli {

namespace {

Json number_or_null(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

constexpr std::string_view category_name(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::parse: return "parse";
    case ErrorCategory::unsupported: return "unsupported";
    case ErrorCategory::numeric: return "numeric";
    case ErrorCategory::identity: return "identity";
  }
  return "unknown";
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Json rational_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return to_string(r);
}

Json atoms_json(const TimeExpr& e) {
  Json out = Json::array();
  for (const auto& a : e.atoms()) out.push_back(Json::array({rational_json(a.coef), rational_json(a.rate)}));
  return out;
}

Json step_json(const SolveStep& s) {
  return Json{{"rule", s.rule}, {"paper_eq", s.paper_eq}, {"before", s.before}, {"after", s.after}};
}

Check from_identity(const IdentityCheck& c) {
  return Check{c.name, c.pass, "", c.lhs, c.rhs, c.absdiff, c.tolerance};
}

Json check_json(const Check& c) {
  Json j{{"name", c.name}, {"pass", c.pass}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  if (c.lhs) j["lhs"] = number_or_null(*c.lhs);
  if (c.rhs) j["rhs"] = number_or_null(*c.rhs);
  if (c.absdiff) j["absdiff"] = number_or_null(*c.absdiff);
  if (c.tolerance) j["tolerance"] = *c.tolerance;
  return j;
}

Json document(std::string_view input, const Rational& alpha, const std::vector<SolveStep>& steps,
              Json result, const std::vector<Check>& checks) {
  Json doc;
  doc["input"] = std::string(input);
  doc["alpha"] = to_string(alpha);
  doc["steps"] = Json::array();
  for (const auto& s : steps) doc["steps"].push_back(step_json(s));
  doc["result"] = std::move(result);
  doc["checks"] = Json::array();
  for (const auto& c : checks) doc["checks"].push_back(check_json(c));
  return doc;
}

Json solve_result(const SolveReport& r) {
  Json pf = Json::array();
  for (const auto& t : r.partial_fractions) {
    pf.push_back(Json{{"residue", rational_json(t.residue)},
                      {"q", rational_json(t.q)},
                      {"shape", t.shape == PartialFraction::Shape::odd ? "odd" : "even"}});
  }
  return Json{{"solution", to_string(r.solution)},
              {"atoms", atoms_json(r.solution)},
              {"transformed_equation", r.transformed_equation},
              {"spectral_solution", to_string(r.spectral_solution)},
              {"partial_fractions", std::move(pf)}};
}

std::vector<Check> solve_checks(const SolveReport& r) {
  std::vector<Check> out;
  out.push_back(Check{"residual-exact", r.residual_exact.is_zero(),
                      "c2*y^(2a) + c0*y - forcing = " + to_string(r.residual_exact), {}, {}, {}, {}});
  out.push_back(Check{"initial-condition", r.initial_condition_reproduced, "", {}, {}, {}, {}});
  if (r.residual_numeric_alpha1) {
    out.push_back(Check{"residual-numeric-alpha1", *r.residual_numeric_alpha1 <= 1e-6,
                        "max |residual| over t in {0.1, 0.5, 1, 2, 5}, fourth-order differences",
                        {}, {}, *r.residual_numeric_alpha1, 1e-6});
  }
  return out;
}

Json error_json(std::string_view input, const Rational& alpha, const Error& e) {
  Json err{{"kind", std::string(to_string(e.kind()))},
           {"category", std::string(category_name(e.category()))},
           {"exit_code", static_cast<int>(e.category())},
           {"message", e.what()}};
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    err["span"] = Json{{"begin", pe->span().begin}, {"end", pe->span().end}};
  }
  return Json{{"input", std::string(input)}, {"alpha", to_string(alpha)}, {"error", std::move(err)}};
}

}  // namespace fraxform::cli
