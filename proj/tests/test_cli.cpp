#include <cstdlib>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli.hpp"

using hyp3f2::cli::run;
namespace cli = hyp3f2::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kPoint = "0.31+0.05j,0.43-0.02j,0.57+0.03j,3.71+0.04j,4.12-0.01j";

}  // namespace

TEST(Cli, RelationText) {
  const Result r = call({"relation", "--p", "1,1,1,1,1", "--q", "2,2,2,2,2"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("u"), std::string::npos);
}

TEST(Cli, RelationJsonIsStable) {
  const std::vector<std::string> args{"relation", "--p", "1,1,1,2,1", "--q", "-1,-1,-1,-2,-1", "--format", "json"};
  const Result first = call(args), second = call(args);
  ASSERT_EQ(first.code, cli::kOk);
  EXPECT_EQ(first.out, second.out);
  const auto doc = nlohmann::json::parse(first.out);
  EXPECT_TRUE(doc.contains("u"));
  EXPECT_TRUE(doc.contains("v"));
}

TEST(Cli, RelationLatex) {
  const Result r = call({"relation", "--p", "1,1,1,1,1", "--q", "2,2,2,2,2", "--format", "latex"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("\\frac"), std::string::npos);
}

TEST(Cli, EqualShiftsAreDegenerate) {
  EXPECT_EQ(call({"relation", "--p", "1,0,0,0,0", "--q", "1,0,0,0,0"}).code, cli::kDegenerateShifts);
}

TEST(Cli, VerifyPasses) {
  const Result r = call({"verify", "--p", "1,1,1,1,1", "--q", "2,2,2,2,2", "--a", kPoint});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
}

TEST(Cli, VerifyBelowTolerance) {
  EXPECT_EQ(call({"verify", "--p", "1,1,1,1,1", "--q", "2,2,2,2,2", "--a", kPoint, "--tol", "1e-30"}).code,
            cli::kResidualAboveTolerance);
}

TEST(Cli, NonGenericPoint) {
  EXPECT_EQ(call({"verify", "--p", "1,0,0,0,0", "--q", "0,1,0,0,0", "--a", "1,0.43,0.57,3.71,4.12"}).code,
            cli::kNonGeneric);
  EXPECT_EQ(call({"verify", "--p", "1,0,0,0,0", "--q", "0,1,0,0,0", "--a", "0.31,0.43,0.57,0.71,0.1"}).code,
            cli::kNonGeneric);
}

TEST(Cli, IterationCap) {
  const std::vector<std::string> args{"verify", "--p", "1,0,0,0,0", "--q", "0,1,0,0,0", "--a", kPoint,
                                      "--iter-cap", "50"};
  EXPECT_EQ(call(args).code, cli::kSlowConvergence);
  setenv("HYP3F2_ITER_CAP", "50", 1);
  EXPECT_EQ(call({"verify", "--p", "1,0,0,0,0", "--q", "0,1,0,0,0", "--a", kPoint}).code, cli::kSlowConvergence);
  EXPECT_EQ(call({"verify", "--p", "1,0,0,0,0", "--q", "0,1,0,0,0", "--a", kPoint, "--iter-cap", "10000000"}).code,
            cli::kOk);
  unsetenv("HYP3F2_ITER_CAP");
}

TEST(Cli, Matrix) {
  const Result r = call({"matrix", "--p", "1,0,0,0,0", "--format", "json"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NO_THROW((void)nlohmann::json::parse(r.out));
}

TEST(Cli, Orbit) {
  const Result r = call({"orbit", "--p", "1,0,0,0,0", "--q", "1,1,1,0,0"});
  EXPECT_EQ(r.code, cli::kOk);
}

TEST(Cli, GroupCheck) {
  const Result r = call({"group", "--check"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("order=72 PASS"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({"relation", "--p", "1,0,0", "--q", "0,1,0,0,0"}).code, cli::kUsage);
  EXPECT_EQ(call({"nonsense"}).code, cli::kUsage);
}
