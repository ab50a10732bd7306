#include "commands.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "cover-spec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = coverspec::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& rel) { return std::string(COVERSPEC_DATA_DIR) + "/" + rel; }

}  // namespace

TEST(Cli, GroupInfoS6) {
  const CliRun r = run({"--json", "group-info", "--group", R"({"kind":"sym","n":6})"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("command"), "group-info");
  EXPECT_EQ(j.at("result").at("nu"), 5);
  EXPECT_EQ(j.at("result").at("rk"), 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"repro", "monster"}).code, 0);
  EXPECT_EQ(run({"repro", "sn-catalog"}).code, 2);
  EXPECT_EQ(run({"criterion", "--catalog", data("catalogs/psl2_19.json")}).code, 0);
  const CliRun missing = run({"nurk", "--group", data("groups/none.json")});
  EXPECT_EQ(missing.code, 1);
  EXPECT_NE(missing.err.find("ParseError"), std::string::npos);
  EXPECT_EQ(run({"nurk", "--group", R"({"kind":"psl2","p":9})"}).code, 1);
  EXPECT_EQ(run({"repro", "no-such-example"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
}

TEST(Cli, ReproD2nText) {
  const CliRun r = run({"repro", "d2n-crossratio"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("r_T0 = 4"), std::string::npos);
  EXPECT_NE(r.out.find("(16+4sqrt(-2))/9"), std::string::npos);
  EXPECT_NE(r.out.find("verdict: non-isomorphic"), std::string::npos);
}

TEST(Cli, SpecializeJsonIsDeterministicAndRoundTrips) {
  const std::vector<std::string> args = {"--json", "specialize", "--cover", data("covers/d10.json"), "--t0",
                                         data("t0/d2n.json")};
  const CliRun a = run(args);
  const CliRun b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(nlohmann::json::parse(j.dump(2)), j);
  EXPECT_EQ(j.at("seed"), coverspec::cli::kDefaultSeed);
  EXPECT_EQ(j.at("result").at("r_T0"), 4);
  const CliRun n = run({"--json", "specialize", "--normalized", "--cover", data("covers/d10.json"), "--t0", data("t0/d2n.json")});
  EXPECT_EQ(nlohmann::json::parse(n.out).at("result").at("r_T0"), 4);
}

TEST(Cli, SeedIsRecorded) {
  const CliRun r = run({"--json", "--seed", "7", "genus", "--cover", data("covers/klein.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("seed"), 7);
  EXPECT_EQ(j.at("result").at("genus"), "0");
  EXPECT_EQ(j.at("result").at("exceptional"), "Klein (Z/2)^2");
}

TEST(Cli, RetAndCompare) {
  const CliRun r = run({"--json", "ret", "--group", R"({"kind":"sym","n":4})", "--classes",
                     R"(["[2^1,1^2]","[3^1,1^1]","[4^1]"])", "--count"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out).at("result").at("nielsen_count"), 1);
  const CliRun c = run({"compare", "--a", data("covers/s4_rigid.json"), "--b", data("covers/s4_rigid.json")});
  EXPECT_EQ(c.code, 1);
  EXPECT_NE(c.err.find("GenusSideConditionViolated"), std::string::npos);
  EXPECT_EQ(run({"compare", "--same-group", "--a", data("covers/s4_rigid.json"), "--b", data("covers/s4_rigid.json")}).code,
            0);
}

TEST(Cli, Twist) {
  const CliRun r = run({"--json", "twist", "--group", R"({"kind":"sym","n":3})", "--u", R"j(["(0 1)"])j", "--v",
                     R"j(["(0 2)"])j"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out).at("result").at("conjugate"), true);
}

TEST(Cli, AllReprosRun) {
  for (const auto& name : coverspec::cli::repro_names()) {
    const CliRun r = run({"--json", "repro", name});
    EXPECT_TRUE(r.code == 0 || (name == "sn-catalog" && r.code == 2)) << name << ": " << r.err;
    EXPECT_TRUE(nlohmann::json::accept(r.out)) << name;
  }
}
