#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "dimer_cli/cli.hpp"
#include "oracles.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = dimer::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::string scalar(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

TEST(Cli, TextAndJsonCarryTheSameData) {
  const auto hex = oracle::data_path("hexagonal.dimer");
  const auto memeg = oracle::data_path("memeg.dimer");
  const std::vector<std::vector<std::string>> commands{
      {"validate", hex},  {"report", memeg},   {"matchings", memeg}, {"polygon", memeg},
      {"zigzag", memeg},  {"extremal", memeg}, {"algebra", hex},     {"cy3", hex},
      {"gen-square", "2"}};
  for (auto cmd : commands) {
    auto text = cli(cmd);
    cmd.push_back("--format");
    cmd.push_back("json-lines");
    auto json = cli(cmd);
    EXPECT_EQ(text.code, json.code) << cmd[0];
    auto jl = lines(json.out);
    auto tl = lines(text.out);
    if (cmd[0] == "gen-square") {
      // The content record wraps the whole DIMER file.
      ASSERT_EQ(jl.size(), 1u);
      EXPECT_EQ(nlohmann::json::parse(jl[0])["content"].get<std::string>(), text.out);
      continue;
    }
    ASSERT_EQ(jl.size(), tl.size()) << cmd[0];
    for (std::size_t k = 0; k < jl.size(); ++k) {
      auto rec = nlohmann::json::parse(jl[k]);
      EXPECT_EQ(rec["v"], 1);
      ASSERT_TRUE(rec.contains("kind"));
      for (auto& [key, value] : rec.items()) {
        if (key == "v" || key == "kind") continue;
        if (value.is_array()) {
          for (const auto& x : value) EXPECT_NE(tl[k].find(scalar(x)), std::string::npos) << tl[k];
        } else {
          EXPECT_NE(tl[k].find(scalar(value)), std::string::npos) << key << " in " << tl[k];
        }
      }
    }
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({"report", oracle::data_path("hexagonal.dimer")}).code, 0);
  EXPECT_EQ(cli({"report", oracle::data_path("examplestp.dimer")}).code, 1);
  EXPECT_EQ(cli({"validate", oracle::data_path("cube.dimer")}).code, 2);
  EXPECT_EQ(cli({"validate", "/nonexistent/file.dimer"}).code, 2);
  EXPECT_EQ(cli({"report", "--no-such-flag"}).code, 2);
  EXPECT_EQ(cli({"cy3", oracle::data_path("nonalgebraic.dimer")}).code, 1);
  EXPECT_EQ(cli({"svg", oracle::data_path("hexagonal.dimer"), "--matching", "7"}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, ReportLinesFollowTheRungFormat) {
  auto r = cli({"report", oracle::data_path("nonalgebraic.dimer")});
  for (const auto& l : lines(r.out)) {
    std::istringstream in(l);
    std::string tag, name, status;
    in >> tag >> name >> status;
    EXPECT_EQ(tag, "RUNG");
    EXPECT_TRUE(status == "PASS" || status == "FAIL" || status == "SKIP") << l;
  }
}

TEST(Cli, GenSquareOutputLoads) {
  for (int n = 1; n <= 3; ++n) {
    auto r = cli({"gen-square", std::to_string(n)});
    ASSERT_EQ(r.code, 0);
    auto g = dimer::load(r.out);
    EXPECT_EQ(dimer::dualize(g).num_vertices, 2 * n * n);
    auto p = cli({"gen-square", std::to_string(n), "--pattern"});
    EXPECT_EQ(p.out.rfind("PATTERN 1", 0), 0u);
  }
}

TEST(Cli, ExtremalReportsBinomialEdge) {
  auto r = cli({"extremal", oracle::data_path("memeg.dimer"), "--format", "json-lines"});
  ASSERT_EQ(r.code, 0);
  bool seen = false;
  for (const auto& l : lines(r.out)) {
    auto rec = nlohmann::json::parse(l);
    if (rec["kind"] != "edge" || rec["ray"] != nlohmann::json::array({0, 1})) continue;
    seen = true;
    EXPECT_EQ(rec["multiplicities"], nlohmann::json::array({1, 2, 1}));
  }
  EXPECT_TRUE(seen);
}
