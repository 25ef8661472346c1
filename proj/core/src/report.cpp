#include "mhol/report.hpp"

#include <fstream>
#include <sstream>

namespace mhol {

ojson group_descriptor(const FiniteGroup& G, const std::string& source) {
  return {{"name", G.name()}, {"order", G.order()}, {"source", source}};
}

ojson tgroup_payload(const Analysis& a) {
  const auto& t = a.t;
  ojson table = ojson::array();
  for (std::size_t i = 0; i < t.order; ++i) {
    ojson row = ojson::array();
    for (std::size_t j = 0; j < t.order; ++j) row.push_back(t.product(i, j));
    table.push_back(std::move(row));
  }
  ojson entries = ojson::array();
  for (const auto& e : t.entries) {
    entries.push_back({{"id", e.id},
                       {"class_order", t.group->element_order(static_cast<Elem>(e.id))},
                       {"f", e.triplet.f.images},
                       {"g", e.triplet.g.images},
                       {"h", e.triplet.h.images},
                       {"subgroup", e.subgroup}});
  }
  return {{"aut_order", a.aut->order()},
          {"inner_order", a.aut->inner().order()},
          {"hol_order", a.hol->order()},
          {"centerless", is_centerless(a.group)},
          {"census",
           {{"homomorphisms", a.census.homomorphisms},
            {"triplets", a.census.triplets},
            {"regular_subgroups", a.census.subgroups},
            {"normal_regular_subgroups", a.census.normal}}},
          {"t_group",
           {{"order", t.order},
            {"abelian", t.is_abelian},
            {"exponent", t.exponent},
            {"elementary_2_abelian", t.is_elementary_2_abelian},
            {"cyclic", t.is_cyclic},
            {"identity_id", t.identity_id},
            {"iota_id", t.iota_id},
            {"table", table}}},
          {"h0", entries}};
}

namespace {

ojson subgroup_json(const Subgroup& S) { return {{"order", S.order()}, {"elements", S.elements}}; }

}  // namespace

ojson screen_payload(const ScreenReport& r) {
  ojson witnesses = ojson::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back({{"K1", subgroup_json(w.K1)},
                         {"K2", subgroup_json(w.K2)},
                         {"Q1", subgroup_json(w.Q1)},
                         {"Q2", subgroup_json(w.Q2)}});
  }
  return {{"centerless", r.centerless},
          {"kset", r.kset},
          {"kset_char", r.kset_char},
          {"char_disagreements", r.char_disagreements},
          {"k12", r.k12},
          {"qord", r.qord},
          {"qset", r.qset},
          {"iso_to_g", r.iso_to_g},
          {"q12", r.q12},
          {"passed", r.passed},
          {"witnesses", witnesses}};
}

ojson verify_payload(const std::vector<ConditionReport>& reports) {
  ojson entries = ojson::array();
  bool all = true;
  bool general = true;
  for (const auto& r : reports) {
    ojson A = ojson::object();
    for (std::size_t i = 0; i < kConditionCount; ++i) A[std::string(kConditionNames[i])] = r.A[i];
    ojson witnesses = ojson::array();
    for (const auto& w : r.witnesses) witnesses.push_back({{"condition", w.condition}, {"values", w.values}});
    entries.push_back({{"entry_id", r.entry_id},
                       {"A", A},
                       {"B_direct", r.B_direct},
                       {"B_a", r.B_a},
                       {"B_b", r.B_b},
                       {"B_c", r.B_c},
                       {"C_d", r.C_d},
                       {"C_e", r.C_e},
                       {"implications", r.implications_hold()},
                       {"relations", r.relations},
                       {"simultaneous_normal", r.simultaneous_normal},
                       {"kernel_product", r.kernel_product},
                       {"commutator_factorization", r.commutator_factorization},
                       {"all_hold", r.theorem_holds()},
                       {"witnesses", witnesses}});
    all = all && r.theorem_holds();
    general = general && r.general_identities_hold();
  }
  const bool centerless = !reports.empty() && reports.front().centerless;
  return {{"centerless", centerless},
          {"entries_checked", reports.size()},
          {"general_identities_hold", general},
          {"all_hold", all},
          {"entries", entries}};
}

ojson oracle_payload(const OracleBundle& b) {
  return {{"hol_order", b.hol_order},
          {"nhol_order", b.nhol_order},
          {"t_order", b.t_order},
          {"hol_equal", b.hol_equal},
          {"t_equal", b.t_equal},
          {"regular_total", b.regular_total},
          {"regular_isomorphic", b.regular_isomorphic},
          {"regular_equal", b.regular_equal},
          {"agreement", b.agreement()}};
}

ojson to_json(const RunReport& r) {
  ojson j = {{"tool_version", r.tool_version}, {"command", r.command}, {"group", r.group}, {"payload", r.payload}};
  ojson counters = ojson::object();
  for (const auto& [k, v] : r.counters) counters[k] = v;
  j["counters"] = counters;
  if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
  return j;
}

RunReport report_from_json(const ojson& j) {
  try {
    RunReport r;
    r.tool_version = j.at("tool_version").get<std::string>();
    r.command = j.at("command").get<std::string>();
    r.group = j.at("group");
    r.payload = j.at("payload");
    for (const auto& [k, v] : j.at("counters").items()) r.counters[k] = v.get<std::uint64_t>();
    if (j.contains("timing_ms")) r.timing_ms = j["timing_ms"].get<double>();
    return r;
  } catch (const ojson::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

std::string serialize_report(const RunReport& r) { return to_json(r).dump(2) + "\n"; }

RunReport parse_report(const std::string& text) {
  try {
    return report_from_json(ojson::parse(text));
  } catch (const ojson::parse_error& e) {
    throw InputError(std::string("report is not valid JSON: ") + e.what());
  }
}

void write_report(const RunReport& r, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write report " + path.string());
  out << serialize_report(r);
}

RunReport read_report(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open report " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_report(buf.str());
}

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string format_text(const RunReport& r) {
  std::ostringstream out;
  const auto& p = r.payload;
  const std::string name = r.group.value("name", std::string("?"));
  if (r.command == "tgroup") {
    const auto& t = p.at("t_group");
    out << name << ": |G| = " << r.group.value("order", 0) << ", |Aut| = " << p.at("aut_order").get<std::size_t>()
        << ", |Hol| = " << p.at("hol_order").get<std::size_t>() << "\n";
    const auto& c = p.at("census");
    out << "regular subgroups isomorphic to G: " << c.at("regular_subgroups").get<std::size_t>()
        << ", normal in Hol: " << c.at("normal_regular_subgroups").get<std::size_t>() << "\n";
    out << "T order " << t.at("order").get<std::size_t>() << ", exponent " << t.at("exponent").get<std::uint64_t>()
        << ", abelian: " << yes_no(t.at("abelian")) << ", cyclic: " << yes_no(t.at("cyclic"))
        << ", elementary 2-abelian: " << yes_no(t.at("elementary_2_abelian")) << "\n";
    for (const auto& e : p.at("h0")) {
      out << "  entry " << e.at("id").get<std::size_t>() << ": class order " << e.at("class_order").get<std::size_t>()
          << ", g =";
      for (const auto& v : e.at("g")) out << ' ' << v.get<Elem>();
      out << "\n";
    }
  } else if (r.command == "screen") {
    out << "centerless: " << yes_no(p.at("centerless")) << "; witnesses: ";
    if (p.at("witnesses").empty()) {
      out << "none\n";
    } else {
      out << p.at("witnesses").size() << "\n";
      for (const auto& w : p.at("witnesses")) {
        out << "  |K1| = " << w.at("K1").at("order").get<std::size_t>()
            << ", |K2| = " << w.at("K2").at("order").get<std::size_t>()
            << ", |Q1| = " << w.at("Q1").at("order").get<std::size_t>()
            << ", |Q2| = " << w.at("Q2").at("order").get<std::size_t>() << "\n";
      }
    }
  } else if (r.command == "verify") {
    out << name << ": " << p.at("entries_checked").get<std::size_t>() << " entries, centerless: "
        << yes_no(p.at("centerless")) << ", all conditions hold: " << yes_no(p.at("all_hold"))
        << ", general identities hold: " << yes_no(p.at("general_identities_hold")) << "\n";
    for (const auto& e : p.at("entries")) {
      if (e.at("witnesses").empty()) continue;
      out << "  entry " << e.at("entry_id").get<std::size_t>() << ":";
      for (const auto& w : e.at("witnesses")) out << ' ' << w.at("condition").get<std::string>();
      out << "\n";
    }
  } else if (r.command == "oracle") {
    out << "Hol order " << p.at("hol_order").get<std::size_t>() << ", NHol order "
        << p.at("nhol_order").get<std::size_t>() << ", T order " << p.at("t_order").get<std::size_t>()
        << ", main-path agreement: " << yes_no(p.at("agreement")) << "\n";
  } else if (r.command == "catalog") {
    for (const auto& e : p.at("entries")) {
      out << e.at("name").get<std::string>() << "  order " << e.at("order").get<std::size_t>();
      const auto tier = e.at("tier").get<std::string>();
      if (tier != "default") out << "  [" << tier << "]";
      const auto desc = e.at("description").get<std::string>();
      if (!desc.empty()) out << "  " << desc;
      out << "\n";
    }
  } else {
    out << r.payload.dump(2) << "\n";
  }
  return out.str();
}

}  // namespace mhol
