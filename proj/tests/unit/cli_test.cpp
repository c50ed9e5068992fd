#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace matchbound::cli {
namespace {

struct CliRun {
  int status = -1;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  CliRun r;
  r.status = run_cli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

TEST(CliTest, GenTriangles) {
  const CliRun r = run({"gen", "triangles", "2"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out, "6 6\n0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n");
}

TEST(CliTest, GenToFile) {
  const auto path = std::filesystem::temp_directory_path() / "matchbound_cli_gen.txt";
  const CliRun r = run({"gen", "random", "8", "1/2", "1", "-o", path.string()});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream file(path);
  std::string header;
  std::getline(file, header);
  EXPECT_EQ(header, "8 13");
  std::filesystem::remove(path);
}

TEST(CliTest, GenTrianglesPipedToVerify) {
  const CliRun gen = run({"gen", "triangles", "4"});
  const CliRun r = run({"verify", "--algo", "stabilize"}, gen.out);
  EXPECT_EQ(r.status, kExitOk) << r.err;
  EXPECT_NE(r.out.find("k: 4\n"), std::string::npos);
  EXPECT_NE(r.out.find("bound_23md: 3*d*k=24 2*m=24 (equality)"), std::string::npos);
  EXPECT_NE(r.out.find("passed: true"), std::string::npos);
}

TEST(CliTest, MatchPathStabilize) {
  const CliRun gen = run({"gen", "path", "4"});
  const CliRun r = run({"match", "--algo", "stabilize"}, gen.out);
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out, "k 2\n0 1\n2 3\n");
}

TEST(CliTest, MatchAlgorithms) {
  const std::string k4 = run({"gen", "complete", "4"}).out;
  EXPECT_EQ(run({"match", "--algo", "greedy"}, k4).out, "k 2\n0 1\n2 3\n");
  EXPECT_EQ(run({"match", "--algo", "exact"}, k4).out.substr(0, 4), "k 2\n");
  EXPECT_EQ(run({"match"}, k4).out, "k 2\n0 1\n2 3\n");
}

TEST(CliTest, VerifyLoopEdgeIsUsageError) {
  const auto path = std::filesystem::temp_directory_path() / "matchbound_cli_loop.txt";
  std::ofstream(path) << "2 1\n0 0\n";
  const CliRun r = run({"verify", "-i", path.string()});
  EXPECT_EQ(r.status, kExitUsage);
  EXPECT_NE(r.err.find("LoopEdge(0)"), std::string::npos) << r.err;
  std::filesystem::remove(path);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).status, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).status, kExitUsage);
  EXPECT_EQ(run({"match", "--algo", "blossom"}, "2 1\n0 1\n").status, kExitUsage);
  EXPECT_EQ(run({"gen", "cycle", "2"}).status, kExitUsage);
  EXPECT_EQ(run({"gen", "hypercube", "3"}).status, kExitUsage);
  EXPECT_EQ(run({"verify", "-i", "/nonexistent/graph.txt"}).status, kExitUsage);
  EXPECT_EQ(run({"verify"}, "3 1\n0 x\n").status, kExitUsage);
  EXPECT_EQ(run({"match", "--algo", "exact", "--limits", "7"}, "2 1\n0 1\n").status, kExitUsage);
  EXPECT_EQ(run({"match", "--algo", "exact", "--limits", "0,5"}, "2 1\n0 1\n").status,
            kExitUsage);
  EXPECT_EQ(run({"bench", "--family", "path"}).status, kExitUsage);
  EXPECT_EQ(run({"--help"}).status, kExitOk);
}

TEST(CliTest, InstanceTooLarge) {
  const std::string k10 = run({"gen", "complete", "10"}).out;
  const CliRun r = run({"match", "--algo", "exact"}, k10);
  EXPECT_EQ(r.status, kExitTooLarge);
  EXPECT_NE(r.err.find("InstanceTooLarge"), std::string::npos);
  EXPECT_EQ(run({"verify", "--algo", "exact"}, k10).status, kExitTooLarge);
  EXPECT_EQ(run({"match", "--algo", "exact", "--limits", "45,10"}, k10).out.substr(0, 4), "k 5\n");
}

TEST(CliTest, VerifyJsonShape) {
  const std::string g = run({"gen", "star", "4"}).out;
  const CliRun r = run({"verify", "--json"}, g);
  EXPECT_EQ(r.status, kExitOk);
  for (const char* key : {"\"source\": \"stdin\"", "\"algorithm\": \"stabilize\"", "\"graph\"",
                          "\"certificate\"", "\"bound_23md_holds\": true", "\"per_edge\"",
                          "\"wall_time_us\"", "\"passed\": true"}) {
    EXPECT_NE(r.out.find(key), std::string::npos) << key;
  }
}

TEST(CliTest, Bench) {
  const CliRun r = run({"bench", "--family", "triangles", "--sizes", "1,2,20", "--repeats", "2"});
  EXPECT_EQ(r.status, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], "family size n m k_stabilize stabilize_us k_exact exact_us");
  EXPECT_EQ(rows[1].rfind("triangles 1 3 3 1 ", 0), 0u);
  EXPECT_NE(rows[3].find("skipped"), std::string::npos);  // 60 edges > 40

  const CliRun rnd = run({"bench", "--family", "random", "--sizes", "10", "--p", "0.2", "--seed", "3"});
  EXPECT_EQ(rnd.status, kExitOk) << rnd.err;
  EXPECT_EQ(run({"bench", "--family", "path", "--sizes", "3,x"}).status, kExitUsage);
}

}  // namespace
}  // namespace matchbound::cli
