#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "mhol/group.hpp"

namespace mhol {

struct GroupSpec;
using SpecPtr = std::shared_ptr<const GroupSpec>;

// Element indexing per kind:
//   cyclic(n)       k is the residue k
//   dihedral(m)     order 2m, r^i s^j has index j*m + i
//   symmetric(k)    permutations of k points in lexicographic order
//   alternating(k)  even permutations in lexicographic order
//   product         (l, r) has index l*|R| + r
//   semidirect      (n, a) has index n*|A| + a, (n, a)(n', a') = (n a(n'), a a')
//   permgroup       closure of the generators in lexicographic order
struct BuiltinSpec {
  enum class Kind { cyclic, dihedral, symmetric, alternating };
  Kind kind;
  std::size_t parameter;
};

struct ProductSpec {
  SpecPtr left;
  SpecPtr right;
};

// action[i] is the full image array, on the elements of `normal`, of the
// automorphism attached to the i-th generator of `acting`.
struct SemidirectSpec {
  SpecPtr normal;
  SpecPtr acting;
  std::vector<std::vector<Elem>> action;
};

struct TableSpec {
  std::size_t order;
  std::vector<Elem> table;  // row-major
};

struct PermGroupSpec {
  std::size_t degree;
  std::vector<std::vector<Elem>> generators;
};

struct GroupSpec {
  std::variant<BuiltinSpec, ProductSpec, SemidirectSpec, TableSpec, PermGroupSpec> body;
  std::string name;  // empty: derived from the body
};

SpecPtr cyclic(std::size_t n);
SpecPtr dihedral(std::size_t m);
SpecPtr symmetric(std::size_t k);
SpecPtr alternating(std::size_t k);
SpecPtr product(SpecPtr left, SpecPtr right);
SpecPtr semidirect(SpecPtr normal, SpecPtr acting, std::vector<std::vector<Elem>> action);
SpecPtr table_spec(std::size_t order, std::vector<Elem> table);
SpecPtr permgroup(std::size_t degree, std::vector<std::vector<Elem>> generators);
SpecPtr named(SpecPtr spec, std::string name);

std::string default_name(const GroupSpec& spec);

// Deterministic: equal specs give byte-identical tables. Throws InputError.
GroupPtr elaborate(const GroupSpec& spec, std::size_t full_assoc_order = 512);

// JSON form, e.g. {"kind":"semidirect","normal":{"kind":"cyclic","n":7},
// "acting":{"kind":"cyclic","n":9},"action":[{"power":2}]}. An action
// entry is an image array or {"power": k} for x -> x^k.
SpecPtr spec_from_json(const nlohmann::json& j);
nlohmann::json spec_to_json(const GroupSpec& spec);

// Inline expressions: cyclic(5), dihedral(3), symmetric(4), alternating(5),
// the short forms C5 D3 S4 A5, and products joined by '*'.
SpecPtr parse_group_expression(const std::string& text);

// Group files: one JSON header line, then data rows. Blank lines and
// lines starting with '#' are ignored. For kind "table" the rows are the
// Cayley table; for "permgroup" each row is one generator as an image
// array; any other kind is a spec carried in the header itself.
struct GroupFile {
  nlohmann::json header;  // as read, plus "reindexed" when the identity was moved to 0
  SpecPtr spec;
  GroupPtr group;
};

GroupFile parse_group_file(const std::filesystem::path& path, std::size_t full_assoc_order = 512);
GroupFile parse_group_text(const std::string& text, const std::string& origin = "<text>",
                           std::size_t full_assoc_order = 512);
// Writes the group as kind "table".
std::string group_file_text(const FiniteGroup& G);
void write_group_file(const FiniteGroup& G, const std::filesystem::path& path);

struct CatalogEntry {
  std::string name;
  std::string tier;  // "default", "slow" or "very_slow"
  std::string description;
  std::filesystem::path path;
  std::size_t order = 0;
};

// Every *.grp file in `dir`, sorted by name. Throws InputError on a bad file.
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& dir);
GroupFile load_entry(const CatalogEntry& entry, std::size_t full_assoc_order = 512);

}  // namespace mhol
