#include "mhol/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "mhol/catalog.hpp"

#ifndef MHOL_DEFAULT_CATALOG
#define MHOL_DEFAULT_CATALOG "catalog"
#endif

namespace mhol::cli {

namespace {

struct Source {
  GroupPtr group;
  std::string descriptor;
};

Source resolve_group(const CliConfig& config) {
  if (config.source.empty()) throw InputError(config.command + ": a group is required");
  const std::size_t assoc = config.caps.full_assoc_order;
  const auto dir = catalog_dir(config);
  std::error_code ec;
  if (std::filesystem::is_directory(dir, ec)) {
    for (const auto& entry : load_catalog(dir)) {
      if (entry.name != config.source) continue;
      if (entry.tier != "default" && !config.slow) {
        throw InputError(entry.name + " is in the " + entry.tier + " tier; pass --slow to run it");
      }
      return {load_entry(entry, assoc).group, "catalog:" + entry.name};
    }
  }
  if (std::filesystem::is_regular_file(config.source, ec)) {
    return {parse_group_file(config.source, assoc).group, "file:" + config.source};
  }
  SpecPtr spec;
  try {
    spec = parse_group_expression(config.source);
  } catch (const InputError&) {
    throw InputError("unknown group '" + config.source + "': not a catalog name, file or expression");
  }
  return {elaborate(*spec, assoc), "expr:" + config.source};
}

void validate(const CliConfig& config) {
  static const char* commands[] = {"tgroup", "screen", "verify", "oracle", "catalog"};
  if (std::find(std::begin(commands), std::end(commands), config.command) == std::end(commands)) {
    throw InputError("unknown command '" + config.command + "'");
  }
  if (config.format != "text" && config.format != "structured") {
    throw InputError("--format must be text or structured");
  }
  const auto& c = config.caps;
  if (c.max_aut == 0 || c.max_hol == 0 || c.max_table == 0 || c.budget == 0) {
    throw InputError("caps and budgets must be positive");
  }
}

std::unique_ptr<Executor> make_executor(std::size_t threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (threads == 1) return std::make_unique<SequentialExecutor>();
  return std::make_unique<ThreadPoolExecutor>(threads);
}

void add_analysis_counters(RunReport& r, const Analysis& a) {
  r.counters["search_steps"] = a.steps;
  r.counters["homomorphisms"] = a.census.homomorphisms;
  r.counters["triplets"] = a.census.triplets;
}

int execute(const CliConfig& config, RunReport& report) {
  auto exec = make_executor(config.threads);
  report.command = config.command;
  if (config.command == "catalog") {
    ojson entries = ojson::array();
    for (const auto& e : load_catalog(catalog_dir(config))) {
      entries.push_back({{"name", e.name}, {"order", e.order}, {"tier", e.tier}, {"description", e.description}});
    }
    report.group = ojson::object();
    report.payload = {{"entries", entries}};
    return kOk;
  }
  const Source src = resolve_group(config);
  report.group = group_descriptor(*src.group, src.descriptor);

  if (config.command == "screen") {
    Budget budget(config.caps.budget, "automorphisms of " + src.group->name());
    const auto A = automorphism_group(src.group, config.caps, &budget, exec.get());
    const auto s = screen_group(A, config.caps, exec.get());
    report.payload = screen_payload(s);
    report.counters["search_steps"] = budget.used() + s.steps;
    if (s.char_disagreements != 0) throw ConsistencyError("screen: characteristic tests disagree");
    for (const auto& w : s.witnesses) {
      if (!reverify_witness(A, w, config.caps)) throw ConsistencyError("screen: a witness failed re-verification");
    }
    return kOk;
  }

  const auto a = analyze(src.group, config.caps, exec.get());
  add_analysis_counters(report, a);
  if (config.command == "tgroup") {
    report.payload = tgroup_payload(a);
    return kOk;
  }
  if (config.command == "verify") {
    const auto checks = verify_all(*a.hol, a.t.entries, exec.get());
    report.payload = verify_payload(checks);
    const bool centerless = is_centerless(a.group);
    for (const auto& c : checks) {
      if (centerless && !c.theorem_holds()) return kTheoremFailure;
    }
    for (const auto& c : checks) {
      if (!c.general_identities_hold()) return kConsistencyError;
    }
    return kOk;
  }
  // oracle
  const auto b = oracle_bundle(a, kOracleDegreeCap, exec.get());
  report.payload = oracle_payload(b);
  return b.agreement() ? kOk : kConsistencyError;
}

}  // namespace

std::string catalog_dir(const CliConfig& config) {
  if (!config.catalog_dir.empty()) return config.catalog_dir;
  if (const char* env = std::getenv("MHOL_CATALOG_DIR"); env != nullptr && *env != '\0') return env;
  return MHOL_DEFAULT_CATALOG;
}

RunResult run(const CliConfig& config) {
  RunResult result;
  RunReport report;
  const auto start = std::chrono::steady_clock::now();
  try {
    validate(config);
    result.status = execute(config, report);
  } catch (const InputError& e) {
    result.status = kInputError;
    result.error = std::string("input error: ") + e.what() + "\n";
    return result;
  } catch (const BudgetExceeded& e) {
    result.status = kBudgetExceeded;
    result.error = std::string("budget exceeded: ") + e.what() + "\n";
    return result;
  } catch (const ConsistencyError& e) {
    result.status = kConsistencyError;
    result.error = std::string("internal consistency failure: ") + e.what() + "\n";
    return result;
  } catch (const std::exception& e) {
    result.status = kUnexpected;
    result.error = std::string("error: ") + e.what() + "\n";
    return result;
  }
  if (config.timing) {
    report.timing_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  result.output = config.format == "structured" ? serialize_report(report) : format_text(report);
  if (result.status == kTheoremFailure) {
    result.error = "THEOREM CHECK FAILED on a centerless group; see the witnesses in the report\n";
  } else if (result.status == kConsistencyError) {
    result.error = "internal consistency failure: results disagree; see the report\n";
  }
  if (config.out) {
    try {
      write_report(report, *config.out);
    } catch (const InputError& e) {
      result.status = kInputError;
      result.error += std::string("input error: ") + e.what() + "\n";
    }
  }
  result.report = std::move(report);
  return result;
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Holomorphs, multiple holomorphs and T(G) for finite groups"};
  app.require_subcommand(1);
  app.footer(
      "Groups: a catalog name (see `mhol catalog`), a group file, or an expression such as\n"
      "cyclic(5), D4, S3*C2. MHOL_CATALOG_DIR overrides the catalog directory.\n\n"
      "Exit status:\n"
      "  0  success\n"
      "  1  unexpected error\n"
      "  2  input error (bad group, file or option)\n"
      "  3  a cap or search budget was exceeded\n"
      "  4  internal consistency failure\n"
      "  5  theorem check failed on a centerless group");

  CliConfig config;
  std::string out_path;
  app.add_option("--format", config.format, "Output format: text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--threads", config.threads, "Worker threads, 0 for one per hardware thread");
  app.add_option("--max-aut", config.caps.max_aut, "Largest |Aut(G)| to enumerate");
  app.add_option("--max-hol", config.caps.max_hol, "Largest |Hol(G)| to build");
  app.add_option("--max-table", config.caps.max_table, "Largest |Aut(G)| to tabulate");
  app.add_option("--budget", config.caps.budget, "Search step budget per enumeration");
  app.add_flag("--slow", config.slow, "Allow slow catalog entries");
  app.add_flag("--timing", config.timing, "Record wall time in the report");
  app.add_option("--out", out_path, "Also write the structured report to this path");
  app.add_option("--catalog", config.catalog_dir, "Catalog directory");

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"tgroup", "Compute H0(G) and the group T(G)"},
      {"screen", "Run the screening filter for centerless groups"},
      {"verify", "Check the structural conditions on every H0(G) entry"},
      {"oracle", "Cross-check against brute force in Sym(G) (|G| <= 8)"},
  };
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->fallthrough();
    sub->add_option("group", config.source, "Group to analyse")->required();
    sub->callback([&config, name = s.name] { config.command = name; });
  }
  app.add_subcommand("catalog", "List the catalog")->fallthrough()->callback([&config] { config.command = "catalog"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kOk : kInputError;
  }
  if (!out_path.empty()) config.out = out_path;
  const auto result = run(config);
  out << result.output;
  err << result.error;
  return result.status;
}

}  // namespace mhol::cli
