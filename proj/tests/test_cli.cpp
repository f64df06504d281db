#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "unital_lab/json_io.hpp"

using namespace unital_lab;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + std::string(UNITAL_LAB_CLI) + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) out.append(buf.data(), n);
  int status = pclose(f);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json run_json(const std::string& args) {
  Run r = run(args);
  EXPECT_EQ(r.code, 0) << args;
  return json::parse(r.out);
}

TEST(Cli, UnitalReport) {
  json d = run_json("unital --q 5 --a square --seed 3");
  EXPECT_EQ(d["points"], 126);
  EXPECT_EQ(d["line_census"]["1"], 126);
  EXPECT_EQ(d["line_census"]["6"], 525);
  EXPECT_EQ(d["sampled_automorphism_checks"]["preserved"], d["sampled_automorphism_checks"]["checks"]);
  EXPECT_EQ(d["field"]["q"], 5);
  EXPECT_FALSE(run_json("unital --q 5 --skip-census").contains("line_census"));
}

TEST(Cli, PrimePowerSyntax) {
  json d = run_json("unital --q 3^2 --skip-census");
  EXPECT_EQ(d["field"]["q"], 9);
  EXPECT_EQ(d["field"]["exp"], 2);
}

TEST(Cli, ConstructionRoundTripsThroughJson) {
  for (std::string args : {"construct --q 7 --method conic", "construct --q 9 --method asq14",
                           "construct --q 11 --method q3asq"}) {
    json d = run_json(args);
    ASSERT_TRUE(d["found"].get<bool>()) << args;
    EXPECT_TRUE(d["verification"]["valid"].get<bool>());
    EXPECT_TRUE(d["equations_hold"].get<bool>());
    auto ctx = ctx_from_header(d["field"]);
    Unital u(unital_params_from_json(*ctx, d["unital"]));
    TripleOnanConfig cfg = config_from_json(*ctx, d["configuration"]);
    EXPECT_TRUE(verify_triple_onan(u, cfg.points).valid);
    TripleOnanParams p = triple_params_from_json(*ctx, d["params"]);
    EXPECT_EQ(realize(p).id(), cfg.id());
  }
}

TEST(Cli, ConicAtFiveFindsNothing) {
  json d = run_json("construct --q 5 --method conic");
  EXPECT_FALSE(d["found"].get<bool>());
}

TEST(Cli, FengLiDoesNotExtend) {
  json d = run_json("construct --q 7 --method fengli");
  EXPECT_TRUE(d["found"].get<bool>());
  EXPECT_FALSE(d["extends"].get<bool>());
  EXPECT_FALSE(d["any_extends"].get<bool>());
  for (const auto& di : d["diagonals"]) EXPECT_FALSE(di["in_unital"].get<bool>());
  auto ctx = ctx_from_header(d["field"]);
  EXPECT_NO_THROW(onan_from_json(*ctx, d["onan"]));
}

TEST(Cli, SearchAndCount) {
  json s = run_json("search --q 7 --a conic --threads 3 --max-configs 2");
  EXPECT_EQ(s["report"]["canonical_configurations"], 288);
  EXPECT_EQ(s["report"]["total_configurations"], 288 * 343);
  EXPECT_EQ(s["configurations"].size(), 2u);
  EXPECT_TRUE(s["configurations_truncated"].get<bool>());
  json c = run_json("count --q 7 --a nonsquare --threads 2");
  EXPECT_TRUE(c["equal"].get<bool>());
  EXPECT_EQ(c["common"], 288);
}

TEST(Cli, CyclotomicAndEquiv) {
  json cy = run_json("cyclotomic --q 13 --order 4");
  EXPECT_TRUE(cy["identities_hold"].get<bool>());
  EXPECT_TRUE(cy["n"]["agree"].get<bool>());
  EXPECT_EQ(cy["table"]["total"], 11);
  json eq = run_json("equiv --q 5");
  EXPECT_EQ(eq["class_count"], 3);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("unital --q 6").code, 2);
  EXPECT_EQ(run("unital --q 7 --a 1,0 --b 0,0").code, 2);
  EXPECT_EQ(run("unital --q 7 --a 9,0").code, 2);
  EXPECT_EQ(run("construct --q 7 --method asq14").code, 2);
  EXPECT_EQ(run("construct --q 7 --method nope").code, 2);
  EXPECT_EQ(run("cyclotomic --q 7 --order 4").code, 2);
  EXPECT_EQ(run("search --q 5 --a 0").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("unital --q 11 --skip-census").code, 0);
  EXPECT_EQ(run("unital --q 11 --skip-census", "UNITAL_LAB_MAX_ORDER=50").code, 4);
}

}  // namespace
