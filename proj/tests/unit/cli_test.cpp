#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bicon/cli.hpp"

using namespace bicon;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "bicon");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST(Cli, BoundsTable) {
  const auto r = run({"bounds", "--r", "4", "--s", "5", "--m", "10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("N (sized sum upper)"), std::string::npos);
  EXPECT_NE(r.out.find("N (sized sum upper)                     4\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("M (sized product upper)                 4\n"), std::string::npos) << r.out;
  const auto j = nlohmann::json::parse(run({"bounds", "--r", "4", "--s", "5", "--m", "10", "--format", "json"}).out);
  EXPECT_EQ(j["sized"]["sum_upper"], 4);
  EXPECT_EQ(j["sized"]["prod_upper"], 4);
  EXPECT_EQ(j["unconstrained"]["prod_upper"], 4);
}

TEST(Cli, ComplementOfEmpty) {
  const auto path = temp_file("bicon_empty45.txt", "4 5\n");
  const auto r = run({"complement", path.string()});
  EXPECT_EQ(r.code, 0);
  const auto g = parse_edge_list(r.out);
  EXPECT_EQ(g.edge_count(), 20u);
  EXPECT_EQ(g, complete_bipartite(4, 5));
}

TEST(Cli, ComplementTwiceIsIdentity) {
  const std::string body = "3 4\n1 1\n2 3\n3 4\n";
  const auto once = run({"complement", temp_file("bicon_c1.txt", body).string()});
  const auto twice = run({"complement", temp_file("bicon_c2.txt", once.out).string()});
  EXPECT_EQ(twice.out, body);
}

TEST(Cli, Connectivity) {
  const auto path = temp_file("bicon_k23.txt", to_edge_list(complete_bipartite(2, 3)));
  const auto r = run({"connectivity", path.string(), "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["graph"]["edge_connectivity"]["value"], 2);
  EXPECT_EQ(j["graph"]["vertex_connectivity"]["value"], 2);
  EXPECT_EQ(j["complement"]["edge_connectivity"]["value"], 0);
}

TEST(Cli, VerifyT32) {
  const auto r = run({"verify", "--theorem", "T3.2", "--max-n", "8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("violations: 0"), std::string::npos);
}

TEST(Cli, WitnessAndBiCayley) {
  const auto w = run({"witness", "--family", "s4-g6", "--r", "4", "--s", "5", "--m", "10", "--format", "edge-list"});
  ASSERT_EQ(w.code, 0);
  EXPECT_EQ(parse_edge_list(w.out).edge_count(), 10u);
  const auto b = run({"bicayley", "--r", "4", "--set", "0,1"});
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(parse_edge_list(b.out), bi_cayley(CayleySubset(4, {0, 1})));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"bounds", "--r", "4"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"bounds", "--r", "5", "--s", "4"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"witness", "--family", "s4-g1", "--r", "5", "--s", "5", "--m", "7"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"scan", "--r", "6", "--s", "6", "--m", "18", "--metric", "sum_edge"}).code, cli::kExitTooLarge);
  EXPECT_EQ(run({"connectivity", "/nonexistent/graph.txt"}).code, cli::kExitFile);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}
