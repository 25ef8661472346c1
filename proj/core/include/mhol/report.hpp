#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "mhol/multiple_holomorph.hpp"
#include "mhol/oracle.hpp"
#include "mhol/screen.hpp"
#include "mhol/theorem_lab.hpp"

namespace mhol {

inline constexpr const char* kToolVersion = "0.1.0";

using ojson = nlohmann::ordered_json;

struct RunReport {
  std::string tool_version = kToolVersion;
  std::string command;
  ojson group = ojson::object();    // name, order, source
  ojson payload = ojson::object();  // command specific
  std::map<std::string, std::uint64_t> counters;
  std::optional<double> timing_ms;  // only when requested; breaks byte equality

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

ojson group_descriptor(const FiniteGroup& G, const std::string& source);

ojson tgroup_payload(const Analysis& a);
ojson screen_payload(const ScreenReport& r);
ojson verify_payload(const std::vector<ConditionReport>& reports);
ojson oracle_payload(const OracleBundle& b);

ojson to_json(const RunReport& r);
RunReport report_from_json(const ojson& j);

// Stable key order, two-space indent, trailing newline.
std::string serialize_report(const RunReport& r);
RunReport parse_report(const std::string& text);
void write_report(const RunReport& r, const std::filesystem::path& path);
RunReport read_report(const std::filesystem::path& path);

// Human-readable summary of a report.
std::string format_text(const RunReport& r);

}  // namespace mhol
