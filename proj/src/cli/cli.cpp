#include "fraxform/cli/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "fraxform/cli/report.hpp"
#include "fraxform/cli/suites.hpp"
#include "fraxform/parser.hpp"
#include "fraxform/transform.hpp"

namespace fraxform::cli {

namespace {

enum class Format { json, csv, text };

struct RunConfig {
  Rational alpha = 1;
  std::optional<double> tol;
  std::optional<Format> format;
  std::uint64_t seed = 20130715;
  specfun::EvalConfig eval;

  Format format_or(Format fallback) const { return format.value_or(fallback); }
};

struct Options {
  std::string alpha = "1";
  std::optional<double> tol;
  std::string format;
  std::uint64_t seed = 20130715;
  std::string kind = "sine";
  bool inverse = false;
  std::string grid;
  std::string text;
  std::vector<std::string> rates;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

RunConfig make_config(const Options& o) {
  RunConfig cfg;
  auto alpha = parse_rational(o.alpha);
  if (!alpha || sgn(*alpha) <= 0 || *alpha > 1) {
    throw UsageError("--alpha must be a rational in (0, 1], got '" + o.alpha + "'");
  }
  cfg.alpha = *alpha;
  if (o.tol) {
    if (!(*o.tol > 0.0 && *o.tol <= 1e-2)) throw UsageError("--tol must lie in (0, 1e-2]");
    cfg.tol = o.tol;
    cfg.eval.tol = *o.tol;
  }
  if (!o.format.empty()) {
    cfg.format = o.format == "json" ? Format::json : o.format == "csv" ? Format::csv : Format::text;
  }
  cfg.seed = o.seed;
  if (const char* env = std::getenv("FRAXFORM_MAX_TERMS")) {
    std::size_t n = 0;
    const std::string_view s(env);
    auto res = std::from_chars(s.data(), s.data() + s.size(), n);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size() || n == 0) {
      throw UsageError("FRAXFORM_MAX_TERMS must be a positive integer, got '" + std::string(s) + "'");
    }
    cfg.eval.max_terms = n;
  }
  cfg.eval.validate();
  return cfg;
}

TransformKind kind_of(const std::string& s) {
  return s == "cosine" ? TransformKind::cosine : TransformKind::sine;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void print_steps_text(std::ostream& out, const std::vector<SolveStep>& steps) {
  for (const auto& s : steps) {
    out << s.rule;
    if (!s.paper_eq.empty()) out << " (" << s.paper_eq << ")";
    out << ": " << s.before << "  =>  " << s.after << '\n';
  }
}

void print_checks(std::ostream& out, const std::vector<Check>& checks, Format f) {
  if (f == Format::csv) {
    out << "name,pass,lhs,rhs,absdiff,tolerance\n";
    auto opt = [](const std::optional<double>& x) { return x ? format_double(*x) : std::string(); };
    for (const auto& c : checks) {
      out << csv_field(c.name) << ',' << (c.pass ? "true" : "false") << ',' << opt(c.lhs) << ','
          << opt(c.rhs) << ',' << opt(c.absdiff) << ',' << opt(c.tolerance) << '\n';
    }
    return;
  }
  for (const auto& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (c.lhs && c.rhs) {
      out << "  lhs=" << format_double(*c.lhs) << " rhs=" << format_double(*c.rhs);
    }
    if (c.absdiff) out << " diff=" << format_double(*c.absdiff);
    if (c.tolerance) out << " tol=" << format_double(*c.tolerance);
    if (!c.detail.empty()) out << "  [" << c.detail << "]";
    out << '\n';
  }
}

bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

int identity_exit(const std::vector<Check>& checks) {
  return all_pass(checks) ? 0 : static_cast<int>(ErrorCategory::identity);
}

void print_atoms_csv(std::ostream& out, const TimeExpr& e) {
  out << "coef,rate\n";
  for (const auto& a : e.atoms()) out << to_string(a.coef) << ',' << to_string(a.rate) << '\n';
}

int cmd_transform(const Options& o, const RunConfig& cfg, std::ostream& out) {
  const TransformKind kind = kind_of(o.kind);
  const std::string table_eq = kind == TransformKind::sine ? "2.13" : "2.14";
  std::vector<SolveStep> steps;
  std::vector<Check> checks;
  Json result;
  std::string value_text;
  std::optional<TimeExpr> atoms;

  if (!o.inverse) {
    const TimeExpr e = parse_expr(o.text, cfg.alpha);
    const SpectralExpr F = forward(e, kind);
    for (const auto& a : e.atoms()) {
      const RationalS entry = RationalS(PolyS(a.coef)) * table_entry(kind, a.rate);
      steps.push_back({"table", table_eq, to_string(TimeExpr(cfg.alpha, {a})), to_string(entry)});
    }
    if (e.atoms().size() > 1) steps.push_back({"linearity", "", to_string(e), to_string(F.value())});
    value_text = to_string(F.value());
    result = Json{{"kind", to_string(kind)}, {"direction", "forward"}, {"value", value_text}};
    checks.push_back(Check{"inverse-recovers-input", inverse(F) == e, "", {}, {}, {}, {}});
  } else {
    const SpectralExpr F = parse_spectral(o.text, cfg.alpha, kind);
    const auto terms = partial_fractions(F.value());
    std::string pf;
    for (const auto& t : terms) pf += (pf.empty() ? "" : " + ") + to_string(t);
    if (pf.empty()) pf = "0";
    const TimeExpr e = inverse(F);
    steps.push_back({"partial-fractions", "", to_string(F.value()), pf});
    steps.push_back({"inverse-table", table_eq, pf, to_string(e)});
    value_text = to_string(e);
    atoms = e;
    result = Json{{"kind", to_string(kind)},
                  {"direction", "inverse"},
                  {"value", value_text},
                  {"atoms", atoms_json(e)}};
    checks.push_back(Check{"forward-recovers-input", forward(e, kind).value() == F.value(), "", {},
                           {}, {}, {}});
  }

  switch (cfg.format_or(Format::json)) {
    case Format::json:
      out << document(o.text, cfg.alpha, steps, std::move(result), checks).dump(2) << '\n';
      break;
    case Format::csv:
      if (atoms) {
        print_atoms_csv(out, *atoms);
      } else {
        out << "value\n" << csv_field(value_text) << '\n';
      }
      break;
    case Format::text:
      print_steps_text(out, steps);
      out << value_text << '\n';
      break;
  }
  return identity_exit(checks);
}

int cmd_solve(const Options& o, const RunConfig& cfg, std::ostream& out) {
  const OdeProblem p = parse_problem(o.text, cfg.alpha);
  const SolveReport r = solve(p);
  const auto checks = solve_checks(r);
  switch (cfg.format_or(Format::json)) {
    case Format::json:
      out << document(o.text, cfg.alpha, r.steps, solve_result(r), checks).dump(2) << '\n';
      break;
    case Format::csv:
      print_atoms_csv(out, r.solution);
      break;
    case Format::text:
      print_steps_text(out, r.steps);
      out << "y(t) = " << to_string(r.solution) << '\n';
      print_checks(out, checks, Format::text);
      break;
  }
  return r.accepted() ? 0 : static_cast<int>(ErrorCategory::identity);
}

int cmd_verify(const Options& o, const RunConfig& cfg, std::ostream& out) {
  SuiteOptions opt;
  opt.alpha = cfg.alpha;
  opt.seed = cfg.seed;
  opt.tol = cfg.tol;
  const SuiteOutcome outcome = run_suite(o.text, opt);
  std::size_t passed = 0;
  for (const auto& c : outcome.checks) passed += c.pass ? 1 : 0;
  switch (cfg.format_or(Format::json)) {
    case Format::json: {
      Json result{{"suite", o.text}, {"skipped", outcome.skipped}};
      if (outcome.skipped) {
        result["reason"] = outcome.reason;
      } else {
        result["passed"] = passed;
        result["failed"] = outcome.checks.size() - passed;
      }
      result["seed"] = cfg.seed;
      out << document(o.text, cfg.alpha, {}, std::move(result), outcome.checks).dump(2) << '\n';
      break;
    }
    case Format::csv:
    case Format::text:
      if (outcome.skipped) {
        out << "SKIP " << o.text << ": " << outcome.reason << '\n';
      } else {
        print_checks(out, outcome.checks, cfg.format_or(Format::json));
      }
      break;
  }
  return outcome.skipped ? 0 : identity_exit(outcome.checks);
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw UsageError("empty entry in --grid");
    item = item.substr(b, e - b + 1);
    double v = 0.0;
    auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    if (res.ec != std::errc() || res.ptr != item.data() + item.size()) {
      throw UsageError("malformed --grid entry '" + item + "'");
    }
    grid.push_back(v);
  }
  if (grid.empty()) throw UsageError("--grid needs at least one point");
  return grid;
}

int cmd_eval(const Options& o, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const TimeExpr e = parse_expr(o.text, cfg.alpha);
  const auto grid = parse_grid(o.grid);
  struct Row {
    double t;
    std::optional<double> value;
    std::optional<Error> error;
  };
  std::vector<Row> rows;
  int code = 0;
  for (double t : grid) {
    try {
      rows.push_back({t, expr_eval(e, t, cfg.eval), std::nullopt});
    } catch (const Error& ex) {
      rows.push_back({t, std::nullopt, ex});
      code = std::max(code, static_cast<int>(ex.category()));
      err << "row t=" << format_double(t) << ": " << to_string(ex.kind()) << ": " << ex.what() << '\n';
    }
  }
  switch (cfg.format_or(Format::csv)) {
    case Format::csv:
    case Format::text:
      out << "t,value\n";
      for (const auto& r : rows) {
        out << format_double(r.t) << ',' << (r.value ? format_double(*r.value) : "nan") << '\n';
      }
      break;
    case Format::json: {
      Json list = Json::array();
      for (const auto& r : rows) {
        Json j{{"t", r.t}};
        if (r.value) {
          j["value"] = *r.value;
        } else {
          j["value"] = nullptr;
          j["error"] = Json{{"kind", std::string(to_string(r.error->kind()))}, {"message", r.error->what()}};
        }
        list.push_back(std::move(j));
      }
      out << document(o.text, cfg.alpha, {}, Json{{"rows", std::move(list)}}, {}).dump(2) << '\n';
      break;
    }
  }
  return code;
}

struct TableRow {
  std::string section;
  std::string kind;
  std::string lhs;
  std::string rhs;
  std::string paper_eq;
};

int cmd_table(const Options& o, const RunConfig& cfg, std::ostream& out) {
  std::vector<TableRow> rows;
  std::vector<TransformKind> kinds;
  if (o.kind.empty()) {
    kinds = {TransformKind::sine, TransformKind::cosine};
  } else {
    kinds = {kind_of(o.kind)};
  }
  for (auto kind : kinds) {
    const std::string k(to_string(kind));
    const std::string eq = kind == TransformKind::sine ? "2.13" : "2.14";
    if (o.rates.empty()) {
      rows.push_back({"pair", k, "E(-r*t^a)",
                      kind == TransformKind::sine ? "(2*s)/(s^2+r^2)" : "(2*r)/(s^2+r^2)", eq});
    }
    for (const auto& text : o.rates) {
      auto r = parse_rational(text);
      if (!r) throw UsageError("malformed rate '" + text + "'");
      rows.push_back({"pair", k, to_string(TimeExpr::atom(cfg.alpha, 1, *r)),
                      to_string(table_entry(kind, *r)), eq});
    }
  }
  if (o.rates.empty()) {
    for (auto kind : kinds) {
      const std::string k(to_string(kind));
      if (kind == TransformKind::cosine) {
        rows.push_back({"derivative", k, "f^(a)", "s*F_sine - 2*f(0)", "3.4"});
        rows.push_back({"derivative", k, "f^(2a)", "-s^2*F_cosine - 2*f^(a)(0)", "3.5"});
        rows.push_back({"scaling", k, "f(b*t)", "b^(-a)*F_cosine(s/b^a)", "3.1"});
      } else {
        rows.push_back({"derivative", k, "f^(a)", "-s*F_cosine", "3.6"});
        rows.push_back({"derivative", k, "f^(2a)", "-s^2*F_sine + 2*s*f(0)", "3.7"});
        rows.push_back({"scaling", k, "f(b*t)", "b^(-a)*F_sine(s/b^a)", "3.2"});
      }
    }
  }
  switch (cfg.format_or(Format::json)) {
    case Format::json: {
      Json list = Json::array();
      for (const auto& r : rows) {
        list.push_back(Json{{"section", r.section}, {"kind", r.kind}, {"time", r.lhs},
                            {"spectral", r.rhs}, {"paper_eq", r.paper_eq}});
      }
      std::string input;
      for (const auto& r : o.rates) input += (input.empty() ? "" : " ") + r;
      out << document(input, cfg.alpha, {}, Json{{"entries", std::move(list)}}, {}).dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "section,kind,time,spectral,paper_eq\n";
      for (const auto& r : rows) {
        out << r.section << ',' << r.kind << ',' << csv_field(r.lhs) << ',' << csv_field(r.rhs) << ','
            << r.paper_eq << '\n';
      }
      break;
    case Format::text:
      for (const auto& r : rows) {
        out << r.kind << ' ' << r.section << ": " << r.lhs << "  <->  " << r.rhs << "  (" << r.paper_eq
            << ")\n";
      }
      break;
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Local fractional Fourier sine/cosine transform engine", "fraxform"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--alpha", o.alpha, "fractal order, rational in (0, 1]");
  app.add_option("--tol", o.tol, "series tolerance (also the numeric tolerance of verify)");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", o.seed, "seed for the sampled verify suites");

  auto* transform = app.add_subcommand("transform", "forward or inverse table transform");
  transform->add_option("--kind", o.kind, "sine or cosine")->check(CLI::IsMember({"sine", "cosine"}));
  transform->add_flag("--inverse", o.inverse, "input is a rational function of s");
  transform->add_option("expr", o.text, "time expression or rational function")->required();

  auto* solve_cmd = app.add_subcommand("solve", "solve c2*y^(2a) + c0*y = forcing");
  solve_cmd->add_option("problem", o.text, "problem text")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run an identity suite");
  verify_cmd->add_option("suite", o.text, "suite name")->required()->check(CLI::IsMember(suite_names()));

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a time expression on a grid");
  eval_cmd->add_option("expr", o.text, "time expression")->required();
  eval_cmd->add_option("--grid", o.grid, "comma-separated t values")->required();

  auto* table_cmd = app.add_subcommand("table", "print the transform table");
  std::string table_kind;
  table_cmd->add_option("--kind", table_kind, "restrict to one kind")->check(CLI::IsMember({"sine", "cosine"}));
  table_cmd->add_option("rates", o.rates, "instantiate the pairs at these rates");

  std::vector<const char*> argv{"fraxform"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ErrorCategory::parse);
  }

  RunConfig cfg;
  try {
    cfg = make_config(o);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return static_cast<int>(ErrorCategory::parse);
  } catch (const Error& e) {
    err << "usage error: " << e.what() << '\n';
    return static_cast<int>(ErrorCategory::parse);
  }

  try {
    if (transform->parsed()) return cmd_transform(o, cfg, out);
    if (solve_cmd->parsed()) return cmd_solve(o, cfg, out);
    if (verify_cmd->parsed()) return cmd_verify(o, cfg, out);
    if (eval_cmd->parsed()) return cmd_eval(o, cfg, out, err);
    if (table_cmd->parsed()) {
      o.kind = table_kind;
      return cmd_table(o, cfg, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return static_cast<int>(ErrorCategory::parse);
  } catch (const Error& e) {
    if (cfg.format_or(Format::json) == Format::json) {
      out << error_json(o.text, cfg.alpha, e).dump(2) << '\n';
    }
    err << "error[" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return static_cast<int>(e.category());
  }
  return static_cast<int>(ErrorCategory::parse);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace fraxform::cli
