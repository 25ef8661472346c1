#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "mhol/catalog.hpp"
#include "support.hpp"

using namespace mhol;
using nlohmann::json;

namespace {

std::vector<Elem> table_of(const FiniteGroup& G) { return {G.table().begin(), G.table().end()}; }

std::string error_of(const std::string& text) {
  try {
    parse_group_text(text, "t.grp");
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Elaborate, TrivialGroup) {
  const auto G = elaborate(*cyclic(1));
  EXPECT_EQ(G->order(), 1u);
  EXPECT_EQ(G->name(), "C1");
}

TEST(Elaborate, DihedralThreeIsSymmetricThree) {
  EXPECT_TRUE(are_isomorphic(elaborate(*dihedral(3)), elaborate(*symmetric(3))).has_value());
}

TEST(Elaborate, SemidirectOfOrder63) {
  const auto G = elaborate(*spec_from_json(json::parse(
      R"({"kind":"semidirect","normal":{"kind":"cyclic","n":7},"acting":{"kind":"cyclic","n":9},"action":[{"power":2}]})")));
  EXPECT_EQ(G->order(), 63u);
  EXPECT_FALSE(G->is_abelian());
  EXPECT_EQ(center(G).order(), 3u);
  EXPECT_EQ(G->name(), "C7:C9");
}

TEST(Elaborate, SemidirectActionMustBeAHomomorphism) {
  const auto spec = spec_from_json(json::parse(
      R"({"kind":"semidirect","normal":{"kind":"cyclic","n":7},"acting":{"kind":"cyclic","n":2},"action":[{"power":2}]})"));
  try {
    elaborate(*spec);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("homomorphism"), std::string::npos);
  }
  std::vector<Elem> not_auto{0, 0, 0, 0, 0, 0, 0};
  EXPECT_THROW(elaborate(*semidirect(cyclic(7), cyclic(2), {not_auto})), InputError);
}

TEST(Elaborate, ProductIndexing) {
  const auto G = elaborate(*product(cyclic(2), cyclic(3)));
  // (1, 0) * (0, 1) = (1, 1), index 1 * 3 + 1.
  EXPECT_EQ(G->mul(3, 1), 4u);
  EXPECT_TRUE(G->is_cyclic());
}

TEST(Elaborate, DihedralIndexing) {
  const auto G = elaborate(*dihedral(4));
  // s r s^-1 = r^-1 with r = 1 and s = 4.
  EXPECT_EQ(G->conjugate(4, 1), 3u);
  EXPECT_EQ(G->element_order(1), 4u);
  EXPECT_EQ(G->element_order(4), 2u);
}

TEST(Elaborate, PermGroupA5) {
  const auto G = elaborate(*permgroup(5, {{1, 2, 0, 3, 4}, {1, 2, 3, 4, 0}}));
  EXPECT_EQ(G->order(), 60u);
  EXPECT_TRUE(are_isomorphic(G, elaborate(*alternating(5))).has_value());
  EXPECT_THROW(elaborate(*permgroup(3, {{0, 0, 1}})), InputError);
}

TEST(Elaborate, Deterministic) {
  const auto s = parse_group_expression("S3*C2");
  EXPECT_EQ(table_of(*elaborate(*s)), table_of(*elaborate(*s)));
}

TEST(Expressions, Forms) {
  EXPECT_EQ(elaborate(*parse_group_expression("cyclic(5)"))->order(), 5u);
  EXPECT_EQ(elaborate(*parse_group_expression("D4"))->order(), 8u);
  EXPECT_EQ(elaborate(*parse_group_expression("S3 * C2 * C2"))->order(), 24u);
  EXPECT_EQ(elaborate(*parse_group_expression("alternating(4)"))->order(), 12u);
  EXPECT_THROW(parse_group_expression("Z5"), InputError);
  EXPECT_THROW(parse_group_expression("cyclic(x)"), InputError);
  EXPECT_THROW(parse_group_expression("C5*"), InputError);
}

TEST(SpecJson, RoundTrip) {
  const auto spec = parse_group_expression("D3*C2");
  const auto again = spec_from_json(spec_to_json(*spec));
  EXPECT_EQ(table_of(*elaborate(*spec)), table_of(*elaborate(*again)));
  EXPECT_THROW(spec_from_json(json::parse(R"({"kind":"free"})")), InputError);
}

TEST(GroupFile, RoundTripIsIdentical) {
  for (const char* expr : {"S4", "C2*C4", "D5"}) {
    const auto G = elaborate(*parse_group_expression(expr));
    const auto back = parse_group_text(group_file_text(*G));
    EXPECT_EQ(table_of(*back.group), table_of(*G));
    EXPECT_EQ(back.group->name(), G->name());
  }
  const auto dir = std::filesystem::temp_directory_path() / "mhol_catalog_test";
  std::filesystem::create_directories(dir);
  const auto G = elaborate(*dihedral(5));
  write_group_file(*G, dir / "d5.grp");
  EXPECT_EQ(table_of(*parse_group_file(dir / "d5.grp").group), table_of(*G));
  std::filesystem::remove_all(dir);
}

TEST(GroupFile, NonAssociativeTableNamesTriple) {
  const std::string text =
      "# a loop\n"
      R"({"name": "loop", "order": 5, "kind": "table"})"
      "\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n";
  const auto err = error_of(text);
  EXPECT_NE(err.find("associativity fails at ("), std::string::npos) << err;
  EXPECT_NE(err.find("t.grp"), std::string::npos) << err;
}

TEST(GroupFile, Diagnostics) {
  EXPECT_NE(error_of(R"({"kind": "table", "order": 2})"
                     "\n0 1\n1 x\n")
                .find("t.grp:3: field 2"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"kind": "table", "order": 2})"
                     "\n0 1\n")
                .find("expected 2 table rows"),
            std::string::npos);
  EXPECT_NE(error_of("not json\n").find("header"), std::string::npos);
  EXPECT_NE(error_of(R"({"kind": "table", "order": 2})"
                     "\n0 1\n1 0 1\n")
                .find("expected 2 entries"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"kind": "cyclic", "n": 4, "order": 5})").find("does not match"), std::string::npos);
}

TEST(GroupFile, IdentityIsMovedToZero) {
  // C3 with the identity labelled 2.
  const std::string text = R"({"name": "c3", "order": 3, "kind": "table"})"
                           "\n1 2 0\n2 0 1\n0 1 2\n";
  const auto f = parse_group_text(text);
  EXPECT_EQ(f.header["reindexed"]["identity_was"], 2);
  EXPECT_EQ(f.group->order(), 3u);
  EXPECT_TRUE(f.group->is_cyclic());
}

TEST(GroupFile, PermGroupRows) {
  const std::string text = R"({"name": "A5p", "kind": "permgroup", "degree": 5})"
                           "\n1 2 0 3 4\n1 2 3 4 0\n";
  EXPECT_EQ(parse_group_text(text).group->order(), 60u);
}

TEST(Catalog, EveryEntryElaborates) {
  const auto entries = load_catalog(MHOL_TEST_CATALOG);
  EXPECT_GE(entries.size(), 25u);
  for (const auto& e : entries) {
    const auto f = load_entry(e);
    EXPECT_EQ(f.group->order(), e.order) << e.name;
    EXPECT_EQ(f.group->name(), e.name);
  }
}

TEST(Catalog, Tiers) {
  std::map<std::string, std::string> tier;
  for (const auto& e : load_catalog(MHOL_TEST_CATALOG)) tier[e.name] = e.tier;
  EXPECT_EQ(tier.at("S5"), "slow");
  EXPECT_EQ(tier.at("C11xC11:C5"), "very_slow");
  EXPECT_EQ(tier.at("A5"), "default");
}

TEST(Catalog, Q8IsQuaternion) {
  const auto Q = mhol::test::corpus("Q8");
  std::size_t involutions = 0;
  for (Elem x = 0; x < Q->order(); ++x) involutions += Q->element_order(x) == 2;
  EXPECT_EQ(involutions, 1u);
  EXPECT_FALSE(Q->is_abelian());
}

TEST(Catalog, MissingDirectory) { EXPECT_THROW(load_catalog("/nonexistent/catalog"), InputError); }
