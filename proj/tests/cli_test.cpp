#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mhol/cli.hpp"

using namespace mhol;
using namespace mhol::cli;

namespace {

CliConfig config(std::string command, std::string source = {}) {
  CliConfig c;
  c.command = std::move(command);
  c.source = std::move(source);
  c.catalog_dir = MHOL_TEST_CATALOG;
  return c;
}

int run_argv(std::vector<std::string> args, std::string* out = nullptr, std::string* err = nullptr) {
  args.insert(args.begin(), "mhol");
  args.push_back("--catalog");
  args.push_back(MHOL_TEST_CATALOG);
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream o, e;
  const int status = main_entry(static_cast<int>(argv.size()), argv.data(), o, e);
  if (out) *out = o.str();
  if (err) *err = e.str();
  return status;
}

}  // namespace

TEST(Cli, OracleC5) {
  const auto r = run(config("oracle", "C5"));
  EXPECT_EQ(r.status, kOk) << r.error;
  EXPECT_EQ(r.output, "Hol order 20, NHol order 20, T order 1, main-path agreement: yes\n");
}

TEST(Cli, ScreenA5) {
  const auto r = run(config("screen", "A5"));
  EXPECT_EQ(r.status, kOk) << r.error;
  EXPECT_EQ(r.output, "centerless: yes; witnesses: none\n");
}

TEST(Cli, TGroupS3) {
  auto c = config("tgroup", "S3");
  c.format = "structured";
  const auto r = run(c);
  ASSERT_EQ(r.status, kOk) << r.error;
  const auto j = nlohmann::json::parse(r.output);
  EXPECT_EQ(j["payload"]["t_group"]["order"], 2);
  EXPECT_EQ(j["payload"]["t_group"]["elementary_2_abelian"], true);
  EXPECT_EQ(j["group"]["source"], "catalog:S3");
}

TEST(Cli, VerifyCenterless) {
  const auto r = run(config("verify", "D5"));
  EXPECT_EQ(r.status, kOk) << r.error;
  EXPECT_NE(r.output.find("all conditions hold: yes"), std::string::npos);
}

TEST(Cli, VerifyWithCenterIsInformative) {
  const auto r = run(config("verify", "D4"));
  EXPECT_EQ(r.status, kOk) << r.error;
  EXPECT_NE(r.output.find("centerless: no"), std::string::npos);
}

TEST(Cli, SourcesResolve) {
  EXPECT_EQ(run(config("tgroup", "cyclic(5)")).status, kOk);
  EXPECT_EQ(run(config("tgroup", "S3*C2")).status, kOk);
  const auto path = std::filesystem::temp_directory_path() / "mhol_cli_c3.grp";
  {
    std::ofstream f(path);
    f << R"({"name": "c3", "order": 3, "kind": "table"})" << "\n0 1 2\n1 2 0\n2 0 1\n";
  }
  const auto r = run(config("tgroup", path.string()));
  EXPECT_EQ(r.status, kOk) << r.error;
  std::filesystem::remove(path);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run(config("tgroup", "NoSuchGroup")).status, kInputError);
  EXPECT_EQ(run(config("frobnicate", "S3")).status, kInputError);
  auto c = config("tgroup", "S3");
  c.caps.max_aut = 0;
  EXPECT_EQ(run(c).status, kInputError);
  c = config("tgroup", "S3");
  c.format = "xml";
  EXPECT_EQ(run(c).status, kInputError);
}

TEST(Cli, SlowGate) {
  const auto r = run(config("tgroup", "S5"));
  EXPECT_EQ(r.status, kInputError);
  EXPECT_NE(r.error.find("--slow"), std::string::npos);
  auto c = config("screen", "S5");
  c.slow = true;
  EXPECT_EQ(run(c).status, kOk);
}

TEST(Cli, BudgetExceeded) {
  auto c = config("tgroup", "S4");
  c.caps.budget = 10;
  EXPECT_EQ(run(c).status, kBudgetExceeded);
  EXPECT_EQ(run(config("oracle", "C9")).status, kBudgetExceeded);
}

TEST(Cli, StructuredOutputIsByteIdentical) {
  auto c = config("tgroup", "D6");
  c.format = "structured";
  const auto one = run(c).output;
  c.threads = 4;
  EXPECT_EQ(run(c).output, one);
  EXPECT_EQ(run(c).output, one);
}

TEST(Cli, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "mhol_cli_report.json";
  auto c = config("verify", "S3");
  c.out = path.string();
  const auto r = run(c);
  ASSERT_EQ(r.status, kOk);
  EXPECT_EQ(read_report(path), *r.report);
  std::filesystem::remove(path);
}

TEST(Cli, Catalog) {
  const auto r = run(config("catalog"));
  EXPECT_EQ(r.status, kOk);
  EXPECT_NE(r.output.find("S5  order 120  [slow]"), std::string::npos);
}

TEST(Cli, Argv) {
  std::string out, err;
  EXPECT_EQ(run_argv({"--help"}, &out), kOk);
  EXPECT_NE(out.find("Exit status"), std::string::npos);
  EXPECT_EQ(run_argv({"oracle", "C5"}, &out), kOk);
  EXPECT_EQ(out, "Hol order 20, NHol order 20, T order 1, main-path agreement: yes\n");
  EXPECT_EQ(run_argv({"tgroup", "S3", "--format", "structured", "--threads", "2"}, &out), kOk);
  EXPECT_EQ(run_argv({"tgroup"}, &out, &err), kInputError);
  EXPECT_EQ(run_argv({"tgroup", "S3", "--bogus"}, &out, &err), kInputError);
  EXPECT_EQ(run_argv({"tgroup", "S3", "--format", "xml"}, &out, &err), kInputError);
}

TEST(Cli, EnvironmentOverridesCatalog) {
  CliConfig c;
  ::setenv("MHOL_CATALOG_DIR", "/some/where", 1);
  EXPECT_EQ(catalog_dir(c), "/some/where");
  ::unsetenv("MHOL_CATALOG_DIR");
  c.catalog_dir = "/explicit";
  EXPECT_EQ(catalog_dir(c), "/explicit");
}
