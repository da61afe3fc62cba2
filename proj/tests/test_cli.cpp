#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "defbose/cli.hpp"

using namespace defbose::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::vector<std::string> data_rows(const std::string& csv) {
  std::vector<std::string> rows;
  for (auto& line : lines_of(csv)) {
    if (!line.empty() && line[0] != '#') rows.push_back(line);
  }
  return rows;
}

}  // namespace

TEST(Cli, VirialExamples) {
  auto r = invoke({"virial", "--sf", "mu:1", "--K", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto rows = data_rows(r.out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0], "k,V_k_decimal,V_k_exact");
  EXPECT_EQ(rows[2], "2,0.0000000000000000000e+00,0");
  EXPECT_NE(r.out.find("# sf=mu:1"), std::string::npos);
  EXPECT_NE(r.out.find("# K=2"), std::string::npos);
  EXPECT_NE(r.out.find("# backend=exact"), std::string::npos);
  EXPECT_NE(r.out.find("# artifact=defbose"), std::string::npos);
  EXPECT_NE(r.out.find("# mu_is_reciprocal_integer=true"), std::string::npos);

  r = invoke({"virial", "--sf", "mu:0", "--K", "3"});
  rows = data_rows(r.out);
  EXPECT_EQ(rows[2], "2,-1.7677669529663688110e-01,-1/8*sqrt(2)");
  EXPECT_EQ(rows[3], "3,-3.3000598199168365576e-03,1/8 - 2/27*sqrt(3)");
}

TEST(Cli, ExitCodes) {
  auto r = invoke({"virial", "--sf", "q-mu:3/2,1/4", "--backend", "exact"});
  EXPECT_EQ(r.code, kExitBackend);
  EXPECT_NE(r.err.find("BackendUnsupported"), std::string::npos);
  EXPECT_EQ(lines_of(r.err).size(), 1u);
  EXPECT_EQ(invoke({"virial", "--sf", "mu:1.5"}).code, kExitUsage);
  EXPECT_EQ(invoke({"virial", "--sf", "mu:0", "--K", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"virial"}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"virial", "--sf", "mu:0", "--backend", "float"}).code, kExitUsage);
  EXPECT_EQ(invoke({"sweep", "--sf", "mu:0", "--sweep", "mu=1:0:1/2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"sweep", "--sf", "mu:0", "--sweep", "mu=0:1:0"}).code, kExitUsage);
  EXPECT_EQ(invoke({"sweep", "--sf", "mu:0", "--sweep", "t=0:1:1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"virial", "--sf", "q-eps:order=2", "--backend", "decimal:30"}).code, kExitBackend);
}

TEST(Cli, SweepQuadratic) {
  auto r = invoke({"sweep", "--sf", "mu:0", "--K", "2", "--sweep", "mu=0:1:1/2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = data_rows(r.out);
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_EQ(rows[0], "mu,k,V_k_decimal,V_k_exact");
  EXPECT_EQ(rows[2].substr(0, 12), "0,2,-1.76776");
  EXPECT_EQ(rows[4].substr(0, 16), "1/2,2,-8.8388347");
  EXPECT_EQ(rows[6], "1,2,0.0000000000000000000e+00,0");
}

TEST(Cli, SweepTEndpoints) {
  const auto sweep = invoke({"sweep", "--sf", "mu-q:1/4,3/2", "--K", "4", "--backend", "decimal:30", "--sweep",
                             "t=0:1:1", "--threads", "3"});
  ASSERT_EQ(sweep.code, 0) << sweep.err;
  const auto left = data_rows(invoke({"virial", "--sf", "q-mu:3/2,1/4", "--K", "4", "--backend", "decimal:30"}).out);
  const auto right = data_rows(invoke({"virial", "--sf", "mu-q:1/4,3/2", "--K", "4", "--backend", "decimal:30"}).out);
  const auto rows = data_rows(sweep.out);
  ASSERT_EQ(rows.size(), 9u);
  for (int k = 1; k <= 4; ++k) {
    EXPECT_EQ(rows[k], "0," + left[k]);
    EXPECT_EQ(rows[4 + k], "1," + right[k]);
  }
}

TEST(Cli, DeterministicAcrossThreads) {
  const std::vector<std::string> base{"sweep", "--sf", "mu-q:0,1", "--K", "5", "--sweep", "mu=-1/2:1/2:1/4",
                                      "--sweep", "q=1/2:2:1/2"};
  auto with_threads = [&](const char* n) {
    auto args = base;
    args.push_back("--threads");
    args.push_back(n);
    return invoke(args);
  };
  const auto one = with_threads("1");
  ASSERT_EQ(one.code, 0) << one.err;
  EXPECT_EQ(data_rows(one.out).size(), 1u + 5 * 4 * 5);
  EXPECT_EQ(one.out, with_threads("4").out);
  EXPECT_EQ(one.out, with_threads("4").out);
  EXPECT_EQ(one.out, with_threads("2").out);
}

TEST(Cli, OtherSubcommands) {
  auto r = invoke({"series", "--sf", "mu:1/2", "--K", "4", "--which", "pressure"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto rows = data_rows(r.out);
  EXPECT_EQ(rows[0], "series,variable,n,coefficient_decimal,coefficient_exact");
  EXPECT_EQ(rows[3], "pressure,z,2,8.8388347648318440550e-02,1/16*sqrt(2)");

  r = invoke({"eps-expand", "--K", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  rows = data_rows(r.out);
  EXPECT_EQ(rows[1], "monomial,1,0,1");
  EXPECT_EQ(rows[2], "monomial,1,1,-1/2");

  r = invoke({"hamiltonian", "--K", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"polynomial_in_N\": \"N + 1/2\""), std::string::npos);
  EXPECT_NE(r.out.find("\"metadata\""), std::string::npos);

  r = invoke({"virial", "--sf", "mu:0", "--K", "2", "--format", "pretty"});
  EXPECT_NE(r.out.find("-1/8*sqrt(2)"), std::string::npos);
}

TEST(Cli, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "defbose_cli_test.csv";
  auto r = invoke({"virial", "--sf", "mu:0", "--K", "2", "--out", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(data_rows(text.str()).size(), 3u);
  std::filesystem::remove(path);
}

TEST(Cli, CheckPaper) {
  const auto r = invoke({"check-paper"});
  EXPECT_EQ(r.code, 0) << r.out;
  int discrepancies = 0;
  for (const auto& line : lines_of(r.out)) {
    EXPECT_NE(line.rfind("FAIL", 0), 0u) << line;
    if (line.rfind("DISCREPANCY", 0) == 0) ++discrepancies;
  }
  EXPECT_EQ(discrepancies, 2);
  EXPECT_NE(r.out.find("virial-V5-printed"), std::string::npos);
}
