#include <sstream>

#include <gtest/gtest.h>

#include "cli_app.hpp"

using lgrp::cli::run_cli;
using json = lgrp::json_io::json;

namespace {

const std::string data = LGRP_DATA_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> d8(std::vector<std::string> head) {
  for (const std::string& s : std::vector<std::string>{"-l", data + "/chain5.json", "-g", data + "/d8.json", "-s", data + "/d8_mu.json"})
    head.push_back(s);
  return head;
}

}  // namespace

TEST(Cli, FrattiniJson) {
  const auto r = run(d8({"frattini", "--format", "json"}));
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["maximalCount"], 4);
  EXPECT_EQ(doc["usedFallback"], false);
  EXPECT_EQ(doc["equalityHolds"], true);
  EXPECT_EQ(doc["phi"], lgrp::json_io::load_file(data + "/d8_phi.json"));
}

TEST(Cli, MaximalsWithSecondSubset) {
  const auto r = run({"maximals", "-l", data + "/chain5.json", "-g", data + "/q8.json", "-s", data + "/converse_mu.json",
                      "-s2", data + "/converse_eta.json", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["s2"]["maximal"], false);
  EXPECT_EQ(doc["s2"]["between"], lgrp::json_io::load_file(data + "/converse_theta.json")["values"]);
  EXPECT_EQ(doc["s2"]["levelProfile"]["uniqueDefectLevel"], "c");
}

TEST(Cli, TablesAndDot) {
  auto r = run(d8({"levels"}));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("c: {e, r2}  subgroup"), std::string::npos);
  r = run(d8({"hasse"}));
  EXPECT_EQ(r.out.rfind("digraph levels {", 0), 0u);
  r = run({"hasse", "-l", data + "/chain5.json"});
  EXPECT_EQ(r.out.rfind("digraph lattice {", 0), 0u);
  r = run(d8({"generate"}));
  EXPECT_EQ(r.code, 0);
  r = run(d8({"nongen", "--format", "json"}));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["lambda"], lgrp::json_io::load_file(data + "/d8_phi.json"));
  r = run(d8({"validate"}));
  EXPECT_NE(r.out.find("lsubgroup: true"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frattini", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"levels", "-l", data + "/missing.json"}).code, 2);
  EXPECT_EQ(run({"levels", "-l", data + "/chain5.json", "-g", data + "/q8.json", "-s", data + "/d8_mu.json"}).code, 2);
  EXPECT_EQ(run(d8({"maximals", "--budget", "10"})).code, 3);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, VerifyReportsFailures) {
  // the default suite contains degenerate chain instances where lambda and Phi differ
  const auto r = run({"verify", "--trials", "20", "--format", "json"});
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["instances"], 20);
  EXPECT_EQ(r.code, doc["passed"].get<bool>() ? 0 : 1);
  EXPECT_EQ(doc["properties"]["generate_matches_oracle"]["failures"], 0);
}
