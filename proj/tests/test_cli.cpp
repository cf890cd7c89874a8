#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "b2v/errors.hpp"
#include "b2v_tools/cli.hpp"
#include "b2v_tools/verify.hpp"
#include "json.hpp"

using b2v::tools::run_cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(CliMoment, Examples) {
  EXPECT_EQ(run({"moment", "--alpha", "0,0,0,0", "--kappa", "1"}).out, "1\n");
  const Result both = run({"moment", "--alpha", "2,0,0,0", "--kappa", "1", "--route", "both"});
  EXPECT_EQ(both.code, 0);
  EXPECT_EQ(both.out, "1/10 == 1/10 OK\n");
  EXPECT_EQ(run({"moment", "--alpha", "1,0,0,0", "--kappa", "1"}).out, "0\n");
  EXPECT_EQ(run({"moment", "--alpha", "2,2,0,0", "--kappa", "2", "--route", "double"}).out, "1/495\n");
}

TEST(CliMoment, ParseErrorsExitTwo) {
  EXPECT_EQ(run({"moment", "--alpha", "1,0,0", "--kappa", "1"}).code, 2);
  EXPECT_EQ(run({"moment", "--alpha", "1,0,0,0", "--kappa", "0.5"}).code, 2);
  EXPECT_EQ(run({"moment", "--alpha", "1,0,0,0"}).code, 2);
  EXPECT_EQ(run({"moment", "--alpha", "1,0,0,0", "--kappa", "1", "--route", "triple"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(CliMoment, SingularParameterExitsThree) {
  const Result r = run({"moment", "--alpha", "2,0,0,0", "--kappa", "-1/4"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("pole"), std::string::npos);
}

TEST(CliApplyV, Examples) {
  const Result one = run({"apply-v", "--expr", R"({"vars":"X","terms":[[[0,0],"1"]]})", "--kappa", "1"});
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, "{\"vars\":\"X\",\"terms\":[[[0,0],\"1\"]]}\n");
  const Result x1 =
      run({"apply_v", "--expr", R"({"vars":"X","terms":[[[1,0],"1"]]})", "--kappa", "1", "--route", "both"});
  EXPECT_EQ(x1.code, 0);
  EXPECT_EQ(x1.out, "{\"vars\":\"X\",\"terms\":[[[1,0],\"1/5\"]]}\n");
}

TEST(CliApplyV, ReadsFile) {
  const std::string path = ::testing::TempDir() + "b2v_cli_poly.json";
  {
    std::ofstream f(path);
    f << R"({"vars":"X","terms":[[[2,0],"1"],[[0,2],"1"]]})";
  }
  const Result r = run({"apply-v", "--poly", path, "--kappa", "1/2", "--route", "oracle"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"vars\":\"X\""), std::string::npos);
  std::remove(path.c_str());
  EXPECT_EQ(run({"apply-v", "--poly", path, "--kappa", "1"}).code, 2);
}

TEST(CliApplyV, SingularKappaOracleRoute) {
  const Result r = run({"apply-v", "--expr", R"({"vars":"X","terms":[[[1,0],"1"]]})", "--kappa", "-1/4", "--route",
                        "oracle"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("singular set"), std::string::npos);
  EXPECT_NE(r.err.find("-1/4"), std::string::npos);
}

TEST(CliApplyV, BadInputs) {
  EXPECT_EQ(run({"apply-v", "--expr", R"({"vars":"Q","terms":[]})", "--kappa", "1"}).code, 2);
  EXPECT_EQ(run({"apply-v", "--expr", "nonsense", "--kappa", "1"}).code, 2);
  EXPECT_EQ(run({"apply-v", "--kappa", "1"}).code, 2);
  const Result pole = run({"apply-v", "--expr", R"({"vars":"X","terms":[[[4,0],"1"]]})", "--kappa", "-1"});
  EXPECT_EQ(pole.code, 3);
}

TEST(CliKernel, LowDegree) {
  EXPECT_EQ(run({"kernel", "--n", "0", "--kappa", "1"}).out, "{\"vars\":\"XY\",\"terms\":[[[0,0,0,0],\"1\"]]}\n");
  EXPECT_EQ(run({"kernel", "--n", "1", "--kappa", "1", "--symmetrized"}).out, "{\"vars\":\"XY\",\"terms\":[]}\n");
}

TEST(CliVerify, ExampleSuites) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify", "--suite", "commute", "--max-degree", "6", "--kappa", "1"},
           {"verify", "--suite", "moments", "--max-total", "12", "--kappas", "1/3,1,5/2,7"},
           {"verify", "--suite", "quad", "--kappa", "1.0", "--nodes", "16"},
       }) {
    const Result r = run(args);
    EXPECT_EQ(r.code, 0) << args[2] << "\n" << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["failure_count"], 0);
    EXPECT_GT(j["cases"].get<int>(), 0);
    EXPECT_FALSE(j.contains("wall_seconds"));
  }
}

TEST(CliVerify, KappaFormatsAreNotMixed) {
  EXPECT_EQ(run({"verify", "--suite", "quad", "--kappa", "17/10"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "commute", "--kappa", "1.5"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "all", "--kappa", "1"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "quad", "--kappa", "0.5"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
}

TEST(CliVerify, ReportsAreDeterministic) {
  const std::vector<std::string> args{"verify", "--suite", "recurrence", "--kappas", "1/3,2", "--samples", "20",
                                      "--threads", "4"};
  const Result a = run(args);
  const Result b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const Result timed = run({"verify", "--suite", "commute", "--max-degree", "3", "--timing"});
  EXPECT_TRUE(nlohmann::json::parse(timed.out).contains("wall_seconds"));
}

TEST(CliVerify, QuadWritesConvergenceCsv) {
  const std::string path = ::testing::TempDir() + "b2v_conv.csv";
  const Result r = run({"verify", "--suite", "quad", "--kappa", "1.7", "--nodes", "10", "--csv", path});
  EXPECT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "kappa,alpha,nodes,value,exact,abs_error");
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  EXPECT_EQ(rows, 4 * 5);
  std::remove(path.c_str());
}

TEST(VerifyReport, FailuresCarryBothSides) {
  b2v::tools::Report r;
  r.suite = "demo";
  r.cases = 2;
  r.failures.push_back({"check", {{"n", 1}}, "1/2", "1/3"});
  const auto j = r.to_json();
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(j["failure_count"], 1);
  EXPECT_EQ(j["failures"][0]["lhs"], "1/2");
  EXPECT_EQ(j["failures"][0]["rhs"], "1/3");
}

TEST(VerifyParsing, DecimalKappa) {
  const auto k = b2v::tools::parse_decimal_kappa("1.7");
  EXPECT_EQ(k.exact, b2v::Rational(17, 10));
  EXPECT_DOUBLE_EQ(k.value, 1.7);
  EXPECT_THROW(b2v::tools::parse_decimal_kappa("1/2"), b2v::ParseError);
  EXPECT_THROW(b2v::tools::parse_decimal_kappa("1e3"), b2v::ParseError);
  EXPECT_THROW(b2v::tools::parse_exact_kappa("0.5"), b2v::ParseError);
  EXPECT_EQ(b2v::tools::parse_exact_kappa("-7/3").value(), b2v::Rational(-7, 3));
}
