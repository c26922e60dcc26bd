#include <gtest/gtest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "fraxform/cli/cli.hpp"

using fraxform::cli::run;
using Json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(FRAXFORM_GOLDEN_DIR) + "/" + name);
  EXPECT_TRUE(in.good()) << name;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(CliTransform, ForwardSine) {
  const auto r = call({"transform", "--kind", "sine", "--alpha", "0.9", "E(-2*t^a)"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["result"]["value"], "(2*s)/(s^2+4)");
  EXPECT_EQ(j["alpha"], "9/10");
  EXPECT_EQ(j["steps"][0]["paper_eq"], "2.13");
}

TEST(CliTransform, InverseSine) {
  const auto r = call({"transform", "--kind", "sine", "--inverse", "--alpha", "0.9", "(2*s)/(s^2+9)"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["result"]["value"], "E(-3*t^a)");
  EXPECT_EQ(r.json()["result"]["atoms"], Json::parse("[[1,3]]"));
}

TEST(CliTransform, Zero) {
  const auto r = call({"transform", "--kind", "sine", "--alpha", "0.9", "0"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["result"]["value"], "0");
}

TEST(CliTransform, ParseErrorIsMachineReadable) {
  const auto r = call({"transform", "E(-2*t^b)"});
  EXPECT_EQ(r.code, 2);
  const Json j = r.json();
  EXPECT_EQ(j["error"]["kind"], "syntax");
  EXPECT_EQ(j["error"]["span"]["begin"], 7);
  EXPECT_EQ(j["error"]["span"]["end"], 8);
}

TEST(CliSolve, WorkedExampleGoldenDocument) {
  const auto r = call({"solve", "--alpha", "0.9", "y^(2a) - 9*y = 50*E(-2*t^a); y(0)=1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, read_golden("solve_worked_example.json"));
  EXPECT_EQ(r.json()["result"]["atoms"], Json::parse("[[-10,2],[11,3]]"));
  for (const auto& key : {"input", "alpha", "steps", "result", "checks"}) EXPECT_TRUE(r.json().contains(key));
}

TEST(CliSolve, WorkedExampleTextGolden) {
  const auto r = call({"solve", "--alpha", "0.9", "--format", "text",
                       "y^(2a) - 9*y = 50*E(-2*t^a); y(0)=7/2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, read_golden("solve_worked_example.txt"));
}

TEST(CliSolve, Homogeneous) {
  const auto r = call({"solve", "--alpha", "1", "y^(2a) - 4*y = 0; y(0)=3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["result"]["atoms"], Json::parse("[[3,2]]"));
}

TEST(CliSolve, ResonanceIsUnsupported) {
  const auto r = call({"solve", "--alpha", "0.9", "y^(2a) - 4*y = E(-2*t^a); y(0)=0"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.json()["error"]["kind"], "resonance");
}

TEST(CliSolve, ExitCodes) {
  EXPECT_EQ(call({"solve", "y^(a) - y = 0; y(0)=1"}).code, 3);
  EXPECT_EQ(call({"solve", "y^(2a) - 9*y = 0"}).code, 2);
  EXPECT_EQ(call({"solve", "y^(2a) - 2*y = 0; y(0)=1"}).code, 3);
  EXPECT_EQ(call({"solve", "--alpha", "2", "y^(2a) - 9*y = 0; y(0)=1"}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({}).code, 2);
}

TEST(CliVerify, ParsevalAtOrderOne) {
  const auto r = call({"verify", "parseval", "--alpha", "1"});
  ASSERT_EQ(r.code, 0) << r.out;
  for (const auto& c : r.json()["checks"]) {
    EXPECT_NEAR(c["lhs"].get<double>(), M_PI, 1e-6);
    EXPECT_NEAR(c["rhs"].get<double>(), M_PI, 1e-6);
    EXPECT_LE(c["absdiff"].get<double>(), 1e-6);
    EXPECT_TRUE(c["pass"].get<bool>());
  }
}

TEST(CliVerify, Example1) {
  const auto r = call({"verify", "example1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.json()["checks"][0]["pass"].get<bool>());
}

TEST(CliVerify, FractionalOrderSkipsClassicalSuites) {
  for (const char* suite : {"convolution", "parseval", "oracle"}) {
    const auto r = call({"verify", suite, "--alpha", "0.8"});
    EXPECT_EQ(r.code, 0);
    const Json j = r.json();
    EXPECT_TRUE(j["result"]["skipped"].get<bool>());
    EXPECT_NE(j["result"]["reason"].get<std::string>().find("unsupported semantics at alpha<1"),
              std::string::npos);
  }
}

TEST(CliVerify, FormalSuitesAtEveryOrder) {
  for (const char* alpha : {"1/2", "3/4", "0.9", "1"}) {
    for (const char* suite : {"roundtrip", "derivative-rules", "scaling", "example1"}) {
      const auto r = call({"verify", suite, "--alpha", alpha, "--seed", "7"});
      EXPECT_EQ(r.code, 0) << suite << " " << alpha << "\n" << r.out;
    }
  }
}

TEST(CliVerify, ClassicalSuitesAtOrderOne) {
  for (const char* suite : {"convolution", "oracle"}) {
    const auto r = call({"verify", suite});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_FALSE(r.json()["result"]["skipped"].get<bool>());
  }
}

TEST(CliVerify, UnknownSuiteIsUsageError) { EXPECT_EQ(call({"verify", "nonsense"}).code, 2); }

TEST(CliEval, ExponentialReduction) {
  const auto r = call({"eval", "--alpha", "1", "E(-2*t^a)", "--grid", "0,1"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string header, row0, row1;
  std::getline(in, header);
  std::getline(in, row0);
  std::getline(in, row1);
  EXPECT_EQ(header, "t,value");
  EXPECT_EQ(row0, "0,1");
  EXPECT_NEAR(std::stod(row1.substr(2)), 0.1353352832, 1e-10);
}

TEST(CliEval, HalfOrder) {
  const auto r = call({"eval", "--alpha", "0.5", "E(-1*t^a)", "--grid", "1"});
  ASSERT_EQ(r.code, 0);
  const auto comma = r.out.rfind(',');
  EXPECT_NEAR(std::stod(r.out.substr(comma + 1)), 0.4275835762, 1e-10);
}

TEST(CliEval, ZeroExpression) {
  const auto r = call({"eval", "--alpha", "0.9", "0", "--grid", "0,1,2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "t,value\n0,0\n1,0\n2,0\n");
}

TEST(CliEval, PerRowDomainErrors) {
  const auto r = call({"eval", "--alpha", "0.5", "E(-t^a)", "--grid", "1,5000", "--format", "json"});
  EXPECT_EQ(r.code, 4);
  const Json rows = r.json()["result"]["rows"];
  EXPECT_TRUE(rows[0]["value"].is_number());
  EXPECT_TRUE(rows[1]["value"].is_null());
  EXPECT_EQ(rows[1]["error"]["kind"], "precision");
}

TEST(CliEval, BadGridIsUsageError) {
  EXPECT_EQ(call({"eval", "E(-t^a)", "--grid", "1,,2"}).code, 2);
  EXPECT_EQ(call({"eval", "E(-t^a)", "--grid", "x"}).code, 2);
}

TEST(CliEval, MaxTermsEnvironmentOverride) {
  ::setenv("FRAXFORM_MAX_TERMS", "16", 1);
  const auto r = call({"eval", "--alpha", "0.9", "E(-t^a)", "--grid", "20"});
  ::unsetenv("FRAXFORM_MAX_TERMS");
  EXPECT_EQ(r.code, 4);
  ::setenv("FRAXFORM_MAX_TERMS", "lots", 1);
  EXPECT_EQ(call({"eval", "E(-t^a)", "--grid", "1"}).code, 2);
  ::unsetenv("FRAXFORM_MAX_TERMS");
}

TEST(CliTable, InstantiatedRates) {
  const auto r = call({"table", "--kind", "cosine", "2", "1/2", "--alpha", "0.9"});
  ASSERT_EQ(r.code, 0);
  const Json e = r.json()["result"]["entries"];
  ASSERT_EQ(e.size(), 2u);
  EXPECT_EQ(e[0]["spectral"], "4/(s^2+4)");
  EXPECT_EQ(e[1]["time"], "E(-1/2*t^a)");
}

TEST(CliTable, SymbolicTable) {
  const auto r = call({"table", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("section,kind,time,spectral,paper_eq\n", 0), 0u);
}

TEST(CliFormats, TolValidation) {
  EXPECT_EQ(call({"eval", "--tol", "0.5", "E(-t^a)", "--grid", "1"}).code, 2);
  EXPECT_EQ(call({"eval", "--tol", "1e-8", "E(-t^a)", "--grid", "1"}).code, 0);
  EXPECT_EQ(call({"eval", "--format", "xml", "E(-t^a)", "--grid", "1"}).code, 2);
}
