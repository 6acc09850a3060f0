#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mselab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
    write("single.vc", "2 1 1\n1 2\n");
    write("single0.vc", "2 1 0\n1 2\n");
    write("example.vc", "4 4 2\n1 2\n2 3\n3 4\n1 3\n");
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name) << text;
  }

  std::string read(const std::string& name) const {
    std::ifstream in(dir_ / name);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }

  RunResult run(const std::string& args) const {
    const std::string cmd = "cd '" + dir_.string() + "' && '" MSE_LAB_BINARY "' " + args + " 2>&1";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    while (std::fgets(buf, sizeof buf, pipe)) r.output += buf;
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  fs::path dir_;
};

TEST_F(Cli, ReduceBaseReportsParams) {
  const RunResult r = run("reduce example.vc --stage base --no-pad --out example.json");
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("M=12 k'=138 (69*k) p=27"), std::string::npos) << r.output;
  EXPECT_NE(r.output.find("planar=certified"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir_ / "example.json.layout.json"));
}

TEST_F(Cli, ReduceTreeAndDirected) {
  const RunResult tree = run("reduce single.vc --stage tree");
  ASSERT_EQ(tree.exit_code, 0) << tree.output;
  EXPECT_NE(tree.output.find("stage=tree"), std::string::npos);
  const auto line = tree.output.substr(tree.output.find("stage=tree"));
  EXPECT_NE(line.find("max_degree=4 "), std::string::npos) << line;
  EXPECT_NE(line.find("planar=certified"), std::string::npos);

  const RunResult directed = run("reduce single.vc --stage directed");
  ASSERT_EQ(directed.exit_code, 0) << directed.output;
  const auto dline = directed.output.substr(directed.output.find("stage=directed"));
  EXPECT_NE(dline.find("max_in=3 max_out=3"), std::string::npos) << dline;
}

TEST_F(Cli, ReduceRefusesOversizedRuns) {
  const RunResult r = run("reduce example.vc --stage tree --max-edges 1000000");
  EXPECT_EQ(r.exit_code, 3) << r.output;
  EXPECT_NE(r.output.find("refused"), std::string::npos);
}

TEST_F(Cli, ReduceResumeMatchesDirectRun) {
  ASSERT_EQ(run("reduce single.vc --stage rainbow --out direct.json").exit_code, 0);
  ASSERT_EQ(run("reduce single.vc --stage base --out base.json").exit_code, 0);
  const RunResult resumed = run(
      "reduce --from-instance base.json --from-layout base.json.layout.json --stage rainbow "
      "--out resumed.json");
  ASSERT_EQ(resumed.exit_code, 0) << resumed.output;
  EXPECT_EQ(read("direct.json"), read("resumed.json"));
  EXPECT_EQ(read("direct.json.layout.json"), read("resumed.json.layout.json"));
}

TEST_F(Cli, CanonicalThenVerify) {
  ASSERT_EQ(run("reduce example.vc --stage base --no-pad --out example.json").exit_code, 0);
  const RunResult c =
      run("canonical example.json example.json.layout.json --cover 1,3 --out routes.json");
  ASSERT_EQ(c.exit_code, 0) << c.output;
  EXPECT_NE(c.output.find("wrote 27 routes"), std::string::npos) << c.output;
  EXPECT_NE(c.output.find("shared=138"), std::string::npos) << c.output;

  const RunResult v = run("verify example.json routes.json --layout example.json.layout.json");
  ASSERT_EQ(v.exit_code, 0) << v.output;
  EXPECT_NE(v.output.find("\"count\":138"), std::string::npos) << v.output;
  EXPECT_NE(v.output.find("accept"), std::string::npos);
  EXPECT_NE(v.output.find("invariant1 pass"), std::string::npos);
  EXPECT_NE(v.output.find("invariant2 pass"), std::string::npos);

  auto doc = nlohmann::json::parse(read("routes.json"));
  doc["routes"].erase(doc["routes"].end() - 1);
  doc["edges"].erase(doc["edges"].end() - 1);
  write("short.json", doc.dump());
  const RunResult shorter = run("verify example.json short.json");
  EXPECT_EQ(shorter.exit_code, 1);
  EXPECT_NE(shorter.output.find("wrong route count"), std::string::npos) << shorter.output;

  // Route 27 copies route 1, so the whole row 1 path becomes shared.
  doc = nlohmann::json::parse(read("routes.json"));
  doc["routes"][26] = doc["routes"][0];
  doc["edges"][26] = doc["edges"][0];
  write("over.json", doc.dump());
  const RunResult over = run("verify example.json over.json");
  EXPECT_EQ(over.exit_code, 1);
  EXPECT_NE(over.output.find("exceeding the budget 138 by"), std::string::npos) << over.output;
}

TEST_F(Cli, CanonicalNamesUncoveredColumn) {
  ASSERT_EQ(run("reduce example.vc --stage base --no-pad --out example.json").exit_code, 0);
  const RunResult r = run("canonical example.json example.json.layout.json --cover 1,2");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.output.find("column 4"), std::string::npos) << r.output;
}

TEST_F(Cli, SolveDecisions) {
  ASSERT_EQ(run("reduce single.vc --stage base --no-pad --out yes.json").exit_code, 0);
  ASSERT_EQ(run("reduce single0.vc --stage base --no-pad --out no.json").exit_code, 0);
  const RunResult yes = run("solve yes.json --method flow");
  EXPECT_EQ(yes.exit_code, 0) << yes.output;
  EXPECT_NE(yes.output.find("yes"), std::string::npos);
  const RunResult no = run("solve no.json --method flow");
  EXPECT_EQ(no.exit_code, 1) << no.output;

  ASSERT_EQ(run("gadget bundle 3 2 --p 4 --k 2 --out bundle.json").exit_code, 0);
  const RunResult both = run("solve bundle.json --method both");
  EXPECT_EQ(both.exit_code, 0) << both.output;
  EXPECT_NE(both.output.find("shared=2"), std::string::npos) << both.output;
}

TEST_F(Cli, SolveRespectsCaps) {
  ASSERT_EQ(run("reduce example.vc --stage base --no-pad --out example.json").exit_code, 0);
  EXPECT_EQ(run("solve example.json --method flow").exit_code, 3);
}

TEST_F(Cli, ExportAndVc) {
  ASSERT_EQ(run("gadget connector 2 --out conn.json").exit_code, 0);
  const RunResult dot = run("export conn.json --format dot");
  EXPECT_EQ(dot.exit_code, 0);
  EXPECT_NE(dot.output.find("digraph"), std::string::npos);
  const RunResult json = run("export conn.json --format json --out conn_graph.json");
  EXPECT_EQ(json.exit_code, 0);
  // Connector with a 2-chain (6 arcs) plus two arcs at each terminal.
  EXPECT_EQ(nlohmann::json::parse(read("conn_graph.json")).at("edges").size(), 10u);
  EXPECT_EQ(run("export conn.json --format svg").exit_code, 2);

  const RunResult vc = run("vc example.vc");
  EXPECT_EQ(vc.exit_code, 0);
  EXPECT_NE(vc.output.find("{1,3}"), std::string::npos) << vc.output;
  write("tri.vc", "3 3 1\n1 2\n2 3\n1 3\n");
  EXPECT_EQ(run("vc tri.vc").exit_code, 1);
}

TEST_F(Cli, UsageAndParseErrors) {
  EXPECT_EQ(run("").exit_code, 2);
  EXPECT_EQ(run("reduce missing.vc").exit_code, 2);
  write("bad.vc", "2 1 1\n1 1\n");
  const RunResult bad = run("reduce bad.vc");
  EXPECT_EQ(bad.exit_code, 2);
  EXPECT_NE(bad.output.find("line 2"), std::string::npos) << bad.output;
  write("empty.vc", "3 0 1\n");
  EXPECT_EQ(run("reduce empty.vc").exit_code, 0);
}

}  // namespace
