#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// Run the tool with stderr discarded and stdout captured.
RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(CONLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  RunResult result;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

TEST(CliVerify, TheoremGridHolds) {
  RunResult r = run_cli("verify thm-1.1 --m 3 --n-max 6 --r-max 2");
  EXPECT_EQ(r.exit_code, 0);
  nlohmann::json report = nlohmann::json::parse(r.output);
  EXPECT_EQ(report["claim"], "thm-1.1");
  EXPECT_EQ(report["status"], "held");
  EXPECT_EQ(report["checked"], "1296");
  EXPECT_TRUE(report["counterexamples"].empty());
}

TEST(CliVerify, WitnessCarriesModulus) {
  RunResult r = run_cli("verify conj-1.3 --n 7 --rs-max 5");
  EXPECT_EQ(r.exit_code, 0);
  nlohmann::json report = nlohmann::json::parse(r.output);
  EXPECT_EQ(report["witness"]["modulus"], "3432");
  EXPECT_EQ(report["status"], "held");
}

TEST(CliVerify, UnknownIdListsRegistry) {
  std::string cmd = std::string(CONLAB_CLI_PATH) + " verify bogus 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string output;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
  int status = pclose(pipe);
  EXPECT_EQ(WEXITSTATUS(status), 64);
  EXPECT_NE(output.find("unknown claim id"), std::string::npos);
  EXPECT_NE(output.find("thm-1.1"), std::string::npos);
  EXPECT_NE(output.find("conj-final"), std::string::npos);
}

TEST(CliVerify, ReportsAreByteIdenticalAcrossRunsAndWorkers) {
  RunResult a = run_cli("verify cor-2.2 --n-max 8 --workers 1");
  RunResult b = run_cli("verify cor-2.2 --n-max 8 --workers 4");
  RunResult c = run_cli("verify cor-2.2 --n-max 8 --workers 4");
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.output, b.output);
  EXPECT_EQ(b.output, c.output);
}

TEST(CliVerify, GridFlagSetsExplicitRanges) {
  RunResult r = run_cli("verify thm-2.1 --grid n=2:3 --grid r=1 --grid eps=0");
  EXPECT_EQ(r.exit_code, 0);
  nlohmann::json report = nlohmann::json::parse(r.output);
  EXPECT_EQ(report["grid"]["n"][0], "2");
  EXPECT_EQ(report["grid"]["n"][1], "3");
  EXPECT_EQ(report["checked"], "2");
}

TEST(CliVerify, ConjectureCounterexamplesWriteFindings) {
  std::string findings = temp_path("conlab_cli_findings.jsonl");
  std::filesystem::remove(findings);
  RunResult r = run_cli("verify conj-6.2 --grid n=3 --grid a=1 --grid r=0 --grid eps=1 --findings " +
                        findings);
  EXPECT_EQ(r.exit_code, 3);
  nlohmann::json report = nlohmann::json::parse(r.output);
  EXPECT_EQ(report["status"], "conjecture-counterexample");
  std::ifstream in(findings);
  ASSERT_TRUE(in.good());
  std::string line;
  ASSERT_TRUE(std::getline(in, line));
  nlohmann::json record = nlohmann::json::parse(line);
  EXPECT_EQ(record["claim"], "conj-6.2");
  EXPECT_EQ(record["params"]["n"], "3");
  EXPECT_FALSE(std::getline(in, line));
  std::filesystem::remove(findings);
}

TEST(CliVerify, BudgetFlagAndEnvRejectOversizedGrids) {
  RunResult flag = run_cli("verify thm-1.1 --budget 10");
  EXPECT_EQ(flag.exit_code, 64);
  std::string cmd = "CONGRUENCE_LAB_BUDGET=10 " + std::string(CONLAB_CLI_PATH) + " verify thm-1.1 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  char buf[256];
  while (fread(buf, 1, sizeof buf, pipe) > 0) {
  }
  EXPECT_EQ(WEXITSTATUS(pclose(pipe)), 64);
}

TEST(CliVerify, OutFlagWritesReportFile) {
  std::string out = temp_path("conlab_cli_report.json");
  std::filesystem::remove(out);
  RunResult r = run_cli("verify conj-1.3 --n 7 --rs-max 5 --out " + out);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(r.output.empty());
  std::ifstream in(out);
  ASSERT_TRUE(in.good());
  nlohmann::json report = nlohmann::json::parse(in);
  EXPECT_EQ(report["witness"]["modulus"], "3432");
  std::filesystem::remove(out);
}

TEST(CliSearch, FilteredListHasThirtySixHits) {
  RunResult r = run_cli("search list-5.1 --bound 300");
  EXPECT_EQ(r.exit_code, 0);
  nlohmann::json report = nlohmann::json::parse(r.output);
  EXPECT_EQ(report["count"], "36");
  EXPECT_EQ(report["hits"][0], "10");
  EXPECT_EQ(report["hits"][35], "291");
}

TEST(CliSearch, PrimeChainEndsAtFrozenTail) {
  RunResult r = run_cli("search prime-chain --count 20");
  EXPECT_EQ(r.exit_code, 0);
  nlohmann::json report = nlohmann::json::parse(r.output);
  EXPECT_EQ(report["entries"].size(), 20u);
  EXPECT_EQ(report["entries"][18]["p"], "919");
  EXPECT_EQ(report["entries"][19]["p"], "991");
}

TEST(CliSearch, TableSingleColumn) {
  RunResult r = run_cli("search table1 --xs 1 --format csv");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, "n,1\nf(n),1\ng(n),1\n");
}

TEST(CliSearch, UnknownIdFails) {
  RunResult r = run_cli("search bogus");
  EXPECT_EQ(r.exit_code, 64);
}

TEST(CliTable, DefaultsToCsv) {
  RunResult r = run_cli("table --xs 1,10,20");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, "n,1,10,20\nf(n),1,8,13\ng(n),1,7,14\n");
}

TEST(CliIdentity, PinnedExamplesPass) {
  EXPECT_EQ(run_cli("identity delta --alpha 2 --beta 1 --degree 12").exit_code, 0);
  EXPECT_EQ(run_cli("identity lemma-3.1 --n-max 30").exit_code, 0);
  EXPECT_EQ(run_cli("identity m3-closed --n-max 10").exit_code, 0);
}

TEST(CliIdentity, UnknownIdOrParamFails) {
  EXPECT_EQ(run_cli("identity bogus").exit_code, 64);
  EXPECT_EQ(run_cli("identity lemma-3.1 --alpha 2").exit_code, 64);
}

TEST(CliUsage, MissingSubcommandFails) {
  EXPECT_EQ(run_cli("").exit_code, 64);
  EXPECT_EQ(run_cli("verify").exit_code, 64);
}

}  // namespace
