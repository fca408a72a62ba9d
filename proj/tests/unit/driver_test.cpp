#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "g2skein/driver/driver.hpp"
#include "g2skein/skein/skein.hpp"
#include "json.hpp"

namespace {

using namespace g2skein;

std::string golden(const std::string& name) {
  std::ifstream in(std::string(G2SKEIN_GOLDEN_DIR) + "/" + name, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

driver::RunConfig small(std::vector<std::string> suites) {
  driver::RunConfig c;
  c.suites = std::move(suites);
  c.max_n = 2;
  c.triple_bound = 4;
  c.jobs = 2;
  return c;
}

TEST(Driver, HeckeSuite) {
  const auto r = driver::cmd_verify(small({"hecke"}));
  EXPECT_EQ(r.records.size(), 4U);
  EXPECT_EQ(r.summary().pass, 4);
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(Driver, FormalBetaLambdaGamma) {
  auto c = small({"blg"});
  c.max_n = 1;
  const auto r = driver::cmd_verify(c);
  EXPECT_EQ(r.summary().pass, 2);
  EXPECT_EQ(r.records.size(), 2U);
}

TEST(Driver, CorrespondenceSweep) {
  const auto r = driver::cmd_verify(small({"correspondence"}));
  EXPECT_EQ(r.records.size(), 6 * skein::enumerate_admissible(4).size() + 1);
  EXPECT_EQ(r.summary().fail, 0);
}

TEST(Driver, EmptySelection) {
  const auto r = driver::cmd_verify(small({}));
  EXPECT_TRUE(r.records.empty());
  EXPECT_EQ(r.exit_code(), 0);
  const auto doc = nlohmann::json::parse(driver::emit_report(r, driver::Format::json));
  EXPECT_EQ(doc["summary"]["pass"], 0);
  EXPECT_EQ(doc["summary"]["fail"], 0);
  EXPECT_EQ(doc["summary"]["skip"], 0);
}

TEST(Driver, InjectedFailure) {
  auto c = small({"hecke"});
  c.inject_failure = true;
  const auto r = driver::cmd_verify(c);
  EXPECT_EQ(r.exit_code(), 1);
  EXPECT_EQ(r.summary().fail, 1);
  const auto doc = nlohmann::json::parse(driver::emit_report(r, driver::Format::json));
  const auto& bad = doc["records"].back();
  EXPECT_EQ(bad["status"], "fail");
  EXPECT_FALSE(bad["lhs"].get<std::string>().empty());
  EXPECT_FALSE(bad["rhs"].get<std::string>().empty());
}

TEST(Driver, JsonSchemaAndDeterminism) {
  auto c = small({"hecke", "blg", "correspondence"});
  c.mode = driver::Mode::random;
  c.seed = 42;
  c.output = driver::Format::json;
  const std::string a = driver::emit_report(driver::cmd_verify(c), driver::Format::json);
  c.jobs = 1;
  const std::string b = driver::emit_report(driver::cmd_verify(c), driver::Format::json);
  EXPECT_EQ(a, b);
  const auto doc = nlohmann::json::parse(a);
  for (const char* key : {"max_n", "triple_bound", "mode", "prime", "seed", "suites", "output"}) {
    EXPECT_TRUE(doc["config"].contains(key)) << key;
  }
  for (const auto& rec : doc["records"]) {
    for (const char* key : {"suite", "case", "params", "status", "lhs", "rhs", "elapsed_ms"}) {
      EXPECT_TRUE(rec.contains(key)) << key;
    }
    EXPECT_EQ(rec["elapsed_ms"], 0.0);
  }
  EXPECT_EQ(doc.dump(), nlohmann::json::parse(doc.dump()).dump());
}

TEST(Driver, ConfigValidation) {
  driver::RunConfig c;
  c.mode = driver::Mode::random;
  c.prime = 7;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.prime = 13;
  EXPECT_NO_THROW(c.validate());
  c.max_n = -1;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  driver::RunConfig d;
  d.suites = {"nope"};
  EXPECT_THROW(d.validate(), std::invalid_argument);
}

TEST(Driver, QueryCommands) {
  EXPECT_EQ(driver::cmd_aw(0), "1\n");
  EXPECT_EQ(driver::cmd_aw(2), golden("aw_star_2.txt"));
  EXPECT_EQ(driver::cmd_act(6, std::nullopt, "corollary"), golden("act_6_corollary.txt"));
  EXPECT_EQ(driver::cmd_act(6, std::nullopt, "corollary").rfind("(n+1, -1, -1) : 1\n", 0), 0U);
  EXPECT_EQ(driver::cmd_act(1, std::nullopt, "prop"), "(n, 0, 0) : x0 + x0^-1\n");
  EXPECT_EQ(driver::cmd_act(2, 0, "corollary").find("(-1,"), std::string::npos);
  EXPECT_EQ(driver::cmd_skein(2, 0, 0, 0), "n(1,1,0) : 1\n");
  EXPECT_EQ(driver::cmd_skein(4, 0, 1, 1), golden("skein_4_011.txt"));
  EXPECT_EQ(driver::cmd_skein(6, 1, 1, 2), golden("skein_6_112.txt"));
  EXPECT_THROW(driver::cmd_skein(1, 1, 1, 4), std::invalid_argument);
  EXPECT_THROW(driver::cmd_aw(1, "1,2,3"), std::invalid_argument);
  EXPECT_THROW(driver::cmd_aw(1, "1,2,3,q^{1/3}"), std::invalid_argument);
  EXPECT_THROW(driver::cmd_act(2, 0, "merged"), std::invalid_argument);
}

}  // namespace
