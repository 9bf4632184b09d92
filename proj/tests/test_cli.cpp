#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "affgr/cli.hpp"

using namespace affgr;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ClassifyExamples) {
  auto r = invoke({"classify", "--datum", "E7:adjoint", "--mu", "0,1,0,0,0,0,0", "--char", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["status"], "Normal");

  r = invoke({"classify", "--datum", "B3:SO7", "--mu", "qm", "--char", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["status"], "NonNormal");
}

TEST(Cli, BothEnginesAgree) {
  const auto r = invoke({"classify", "--datum", "E6:adjoint", "--mu", "minuscule:6", "--char", "3",
                         "--engine", "both"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["agree"].get<bool>());
  EXPECT_EQ(j["oracle"]["status"], "Normal");
}

TEST(Cli, ParseErrorsExitTwo) {
  EXPECT_EQ(invoke({"classify", "--datum", "X9:sc", "--mu", "0", "--char", "2"}).code, 2);
  EXPECT_EQ(invoke({"classify", "--datum", "A2:sc", "--mu", "1,x", "--char", "2"}).code, 2);
  EXPECT_EQ(invoke({"classify", "--datum", "A2:sc", "--mu", "1,0", "--char", "4"}).code, 2);
  EXPECT_EQ(invoke({"hasse", "--datum", "A2:sc"}).code, 2);
  EXPECT_EQ(invoke({"nonsense"}).code, 2);
  EXPECT_EQ(invoke({"classify", "--datum", "E6:adjoint", "--mu", "minuscule:2", "--char", "3"}).code, 2);
}

TEST(Cli, HasseDotIsDeterministic) {
  const std::vector<std::string> args{"hasse", "--datum", "E6:adjoint", "--height", "46", "--dot"};
  const auto a = invoke(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, invoke(args).out);
  EXPECT_NE(a.out.find("{1,3,4,5,6}"), std::string::npos);
}

TEST(Cli, HasseJson) {
  const auto r = invoke({"hasse", "--datum", "A2:adjoint", "--height", "8"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["datum"], "A2:SL3/mu3");
  EXPECT_FALSE(j["edges"].empty());
}

TEST(Cli, CoversPi1LeviSliceRing) {
  auto r = invoke({"covers", "--datum", "D5:adjoint", "--lambda", "0,0,0,0,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["covers"].size(), 1u);

  r = invoke({"pi1", "--datum", "D4:adjoint", "--support", "1,3,4"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["pi1_order"], 4);
  EXPECT_EQ(j["levi"]["pi1_order"], 4);

  r = invoke({"levi", "--datum", "D5:adjoint", "--lambda", "1,0,0,1,0", "--mu", "0,1,0,0,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_FALSE(nlohmann::json::parse(r.out)["reduction"].is_null());

  r = invoke({"slice-ring", "--m", "3", "--char", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "NonNormal");
  EXPECT_EQ(invoke({"slice-ring", "--m", "1", "--char", "2"}).code, 2);
}

TEST(Cli, VerifySuiteTable) {
  const auto r = invoke({"verify", "--suite", "tables"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  EXPECT_EQ(invoke({"verify", "--suite", "bogus"}).code, 2);
}
