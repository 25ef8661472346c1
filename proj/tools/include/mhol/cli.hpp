#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "mhol/report.hpp"

namespace mhol::cli {

enum ExitCode : int {
  kOk = 0,
  kUnexpected = 1,
  kInputError = 2,
  kBudgetExceeded = 3,
  kConsistencyError = 4,
  kTheoremFailure = 5,
};

struct CliConfig {
  std::string command;  // tgroup, screen, verify, oracle, catalog
  std::string source;   // catalog name, group file or inline expression
  std::string format = "text";
  Caps caps;
  std::size_t threads = 1;  // 0: one per hardware thread
  bool slow = false;
  bool timing = false;
  std::optional<std::string> out;
  std::string catalog_dir;  // empty: environment, then the built-in default
};

struct RunResult {
  int status = kOk;
  std::optional<RunReport> report;
  std::string output;  // what goes to stdout
  std::string error;   // what goes to stderr
};

// Catalog directory for the config: explicit, MHOL_CATALOG_DIR, built-in.
std::string catalog_dir(const CliConfig& config);

RunResult run(const CliConfig& config);

// Parses argv, runs, prints. Returns the exit status.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace mhol::cli
