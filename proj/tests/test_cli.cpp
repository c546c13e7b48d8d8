#include <gtest/gtest.h>

#include "commands.hpp"

using namespace bethe::app;

namespace {

json xxx_problem() {
  return json::parse(R"({"N": 2, "modules": ["vector", "vector"], "z": ["0", "3"],
                         "twist": {"model": "xxx", "diag": ["1", "1"]}, "xi": [1], "roots": [["1"]], "samples": 3})");
}

json gaudin_problem() {
  return json::parse(R"({"N": 2, "modules": ["vector", "vector"], "z": ["0", "1"],
                         "twist": {"model": "gaudin", "diag": ["0", "0"]}, "xi": [1], "roots": [["1/2"]], "samples": 3})");
}

void strip_runtimes(json& j) {
  if (j.is_object()) {
    j.erase("runtime_ms");
    for (auto& [k, v] : j.items()) strip_runtimes(v);
  } else if (j.is_array()) {
    for (auto& v : j) strip_runtimes(v);
  }
}

}  // namespace

TEST(Cli, CheckIdentitiesExact) {
  auto r = run_command("check-identities", xxx_problem());
  EXPECT_EQ(r.exit_code, 0) << r.report.dump(2);
  for (const auto& c : r.report["checks"]) {
    EXPECT_EQ(c["status"], "pass") << c.dump();
    EXPECT_EQ(c["max_abs_error"], 0.0) << c.dump();
  }
}

TEST(Cli, BetheSolveFindsRootOne) {
  auto r = run_command("bethe-solve", xxx_problem());
  ASSERT_EQ(r.exit_code, 0) << r.report.dump(2);
  ASSERT_EQ(r.report["roots"].size(), 1u);
  const auto& root = r.report["roots"][0];
  EXPECT_NEAR(root["t"][0][0][0].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(root["t"][0][0][1].get<double>(), 0.0, 1e-12);
  EXPECT_LE(root["residual"].get<double>(), 1e-12);
}

TEST(Cli, VerifyCommandsPass) {
  for (const auto& [cmd, prob] : {std::pair{"bethe-verify", xxx_problem()}, std::pair{"gaudin-verify", gaudin_problem()}}) {
    auto r = run_command(cmd, prob);
    EXPECT_EQ(r.exit_code, 0) << r.report.dump(2);
    int eigen = 0;
    for (const auto& c : r.report["checks"])
      if (c["name"].get<std::string>().rfind("eigenvector", 0) == 0) ++eigen;
    EXPECT_EQ(eigen, 2) << cmd;
  }
  auto g = run_command("gaudin-solve", gaudin_problem());
  EXPECT_EQ(g.exit_code, 0);
  EXPECT_NEAR(g.report["roots"][0]["t"][0][0][0].get<double>(), 0.5, 1e-10);
}

TEST(Cli, WrongRootIsACheckFailure) {
  auto p = xxx_problem();
  p["roots"] = json::parse(R"([["2"]])");
  auto r = run_command("bethe-verify", p);
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.report["status"], "fail");
}

TEST(Cli, InputErrorsExitTwo) {
  auto bad = [](json p) { return run_command("bethe-verify", p).exit_code; };
  auto p = xxx_problem();
  EXPECT_EQ(run_command("no-such-command", p).exit_code, 2);
  p["z"] = json::parse(R"([["0", "1"], "3"])");
  EXPECT_EQ(bad(p), 2);
  p = xxx_problem();
  p["z"] = json::parse(R"(["0", "x/2"])");
  EXPECT_EQ(bad(p), 2);
  p = xxx_problem();
  p.erase("roots");
  EXPECT_EQ(bad(p), 2);
  p = xxx_problem();
  p["xi"] = json::parse("[1, 1]");
  EXPECT_EQ(bad(p), 2);
  p = xxx_problem();
  p["twist"] = json::parse(R"({"full": [["1", "2"], ["0", "1"]]})");
  auto r = run_command("bethe-solve", p);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(r.report["error"]["kind"], "SchemaError");
}

TEST(Cli, DeterministicAndRoundTrips) {
  auto a = run_command("bethe-solve", xxx_problem(), {.seed = 5});
  auto b = run_command("bethe-solve", xxx_problem(), {.seed = 5});
  strip_runtimes(a.report);
  strip_runtimes(b.report);
  EXPECT_EQ(a.report.dump(), b.report.dump());
  EXPECT_EQ(json::parse(a.report.dump()), a.report);
  EXPECT_EQ(a.report["inputs"]["seed"], 5);
  // the echoed inputs describe the same problem
  auto c = run_command("bethe-solve", a.report["inputs"]);
  strip_runtimes(c.report);
  EXPECT_EQ(c.report.dump(), a.report.dump());
}

TEST(Cli, FullTwistTransferAndForms) {
  auto p = json::parse(R"({"N": 3, "modules": ["vector", {"kind": "wedge", "k": 2}], "z": ["1/3", "-2"],
                           "twist": {"full": [["1/2", "2/3", "0"], ["0", "-1", "1/5"], ["-1/5", "0", "3/4"]]},
                           "u": "11/6"})");
  auto t = run_command("transfer-eval", p);
  EXPECT_EQ(t.exit_code, 0) << t.report.dump(2);
  EXPECT_EQ(t.report["transfer"].size(), 4u);
  EXPECT_EQ(t.report["transfer"][0]["matrix"][0][0], "1");
  auto f = run_command("forms-check", p);
  EXPECT_EQ(f.exit_code, 0) << f.report.dump(2);
  p["modules"].push_back("vector");
  p["z"].push_back("5");
  auto g = run_command("forms-check", p);
  EXPECT_EQ(g.exit_code, 0) << g.report.dump(2);
}

TEST(Cli, LimitCheckReportsTheFormLimit) {
  auto p = xxx_problem();
  p["twist"] = json::parse(R"({"model": "gaudin", "diag": ["1/2", "-1"]})");
  p["roots"] = json::parse(R"([["2/7"]])");
  auto r = run_command("limit-check", p);
  EXPECT_EQ(r.exit_code, 1);
  for (const auto& c : r.report["checks"]) {
    if (c["name"] == "deformed form limit") EXPECT_EQ(c["status"], "fail");
    else EXPECT_EQ(c["max_abs_error"], 0.0) << c.dump();
  }
}
