#include <gtest/gtest.h>

#include "mhol/catalog.hpp"
#include "mhol/group.hpp"
#include "support.hpp"

using namespace mhol;
using mhol::test::corpus;

namespace {

// Latin square with identity 0 in which every element is an involution;
// no group of order 5 has that shape.
std::vector<Elem> loop5() {
  return {0, 1, 2, 3, 4,  //
          1, 0, 3, 4, 2,  //
          2, 4, 0, 1, 3,  //
          3, 2, 4, 0, 1,  //
          4, 3, 1, 2, 0};
}

}  // namespace

TEST(FiniteGroup, RejectsNonAssociativeTable) {
  try {
    FiniteGroup g("loop", 5, loop5());
    FAIL() << "accepted a loop";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("associativity fails at ("), std::string::npos) << e.what();
  }
}

TEST(FiniteGroup, GeneratorAssociativityTestAlsoRejects) {
  EXPECT_THROW(FiniteGroup("loop", 5, loop5(), {}, 2), InputError);
  auto c6 = elaborate(*cyclic(6), 2);
  EXPECT_EQ(c6->order(), 6u);
}

TEST(FiniteGroup, RejectsRepeatedRowEntry) {
  std::vector<Elem> t = {0, 1, 1, 0};
  t[1] = 0;
  EXPECT_THROW(FiniteGroup("bad", 2, t), InputError);
}

TEST(FiniteGroup, RejectsMissingIdentity) {
  std::vector<Elem> t = {1, 0, 0, 1};
  EXPECT_THROW(FiniteGroup("bad", 2, t), InputError);
}

TEST(FiniteGroup, RejectsGeneratorsThatDoNotGenerate) {
  auto c6 = elaborate(*cyclic(6));
  std::vector<Elem> t(c6->table().begin(), c6->table().end());
  EXPECT_THROW(FiniteGroup("c6", 6, t, {2}), InputError);
  EXPECT_NO_THROW(FiniteGroup("c6", 6, t, {2, 3}));
}

TEST(FiniteGroup, ElementOrdersAndExponent) {
  auto c6 = corpus("C6");
  EXPECT_EQ(c6->element_order(0), 1u);
  EXPECT_EQ(c6->element_order(1), 6u);
  EXPECT_EQ(c6->element_order(2), 3u);
  EXPECT_EQ(c6->element_order(3), 2u);
  EXPECT_EQ(c6->exponent(), 6u);
  EXPECT_TRUE(c6->is_cyclic());
  auto v = corpus("C2xC2");
  EXPECT_EQ(v->exponent(), 2u);
  EXPECT_FALSE(v->is_cyclic());
  EXPECT_TRUE(is_elementary_2_abelian(*v));
  EXPECT_FALSE(is_elementary_2_abelian(*corpus("C4")));
}

TEST(FiniteGroup, PowerWrapsAround) {
  auto c5 = corpus("C5");
  EXPECT_EQ(c5->power(2, 3), 1u);
  EXPECT_EQ(c5->power(2, 0), 0u);
  EXPECT_EQ(c5->power(2, 1'000'000'001ULL), 2u);
}

TEST(Subgroups, ClosureRejectsBadIndex) {
  auto s3 = corpus("S3");
  std::vector<Elem> seed{7};
  EXPECT_THROW(subgroup_closure(s3, seed), InputError);
}

TEST(Subgroups, CenterAndCommutator) {
  EXPECT_EQ(center(corpus("D4")).order(), 2u);
  EXPECT_EQ(center(corpus("Q8")).order(), 2u);
  EXPECT_TRUE(is_centerless(corpus("S3")));
  EXPECT_TRUE(is_centerless(corpus("A5")));
  EXPECT_FALSE(is_centerless(corpus("C7:C9")));
  EXPECT_EQ(center(corpus("C7:C9")).order(), 3u);
  EXPECT_EQ(commutator_subgroup(corpus("S4")).order(), 12u);
  EXPECT_EQ(commutator_subgroup(corpus("A4")).order(), 4u);
  EXPECT_EQ(commutator_subgroup(corpus("A5")).order(), 60u);
  EXPECT_TRUE(commutator_subgroup(corpus("C2xC4")).is_trivial());
}

TEST(Subgroups, NormalSubgroupCounts) {
  EXPECT_EQ(normal_subgroups(corpus("S4")).size(), 4u);
  EXPECT_EQ(normal_subgroups(corpus("D4")).size(), 6u);
  EXPECT_EQ(normal_subgroups(corpus("Q8")).size(), 6u);
  EXPECT_EQ(normal_subgroups(corpus("A5")).size(), 2u);
  EXPECT_EQ(normal_subgroups(corpus("C6")).size(), 4u);
  EXPECT_EQ(normal_subgroups(corpus("S5")).size(), 3u);
  auto even = normal_subgroups(corpus("S4"), [](std::size_t k) { return k % 2 == 0; });
  ASSERT_EQ(even.size(), 3u);
  EXPECT_EQ(even[0].order(), 4u);
  EXPECT_EQ(even[1].order(), 12u);
}

TEST(Subgroups, NormalSubgroupsAreNormalAndSorted) {
  auto G = corpus("D6");
  auto all = normal_subgroups(G);
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_TRUE(is_normal(G, all[i]));
    EXPECT_TRUE(is_subgroup_set(*G, all[i].elements));
    if (i > 0) {
      EXPECT_LE(all[i - 1].order(), all[i].order());
    }
  }
}

TEST(Subgroups, NormalSubgroupBudget) {
  Budget budget(3);
  EXPECT_THROW(normal_subgroups(corpus("S4"), {}, 3, &budget), BudgetExceeded);
}

TEST(Subgroups, NormalClosureOfTransposition) {
  auto s4 = corpus("S4");
  // Lexicographic index 1 is the permutation 0 1 3 2.
  std::vector<Elem> seed{1};
  EXPECT_EQ(s4->element_order(1), 2u);
  EXPECT_EQ(normal_closure(s4, seed).order(), 24u);
  EXPECT_EQ(subgroup_closure(s4, seed).order(), 2u);
}

TEST(Subgroups, ConjugacyClasses) {
  EXPECT_EQ(conjugacy_classes(*corpus("S4")).size(), 5u);
  EXPECT_EQ(conjugacy_classes(*corpus("A5")).size(), 5u);
  EXPECT_EQ(conjugacy_classes(*corpus("C5")).size(), 5u);
  EXPECT_EQ(conjugacy_classes(*corpus("D5")).size(), 4u);
}

TEST(Quotients, KleinQuotientOfS4IsS3) {
  auto s4 = corpus("S4");
  auto ns = normal_subgroups(s4, [](std::size_t k) { return k == 4; });
  ASSERT_EQ(ns.size(), 1u);
  auto q = quotient(s4, ns[0]);
  EXPECT_EQ(q.group->order(), 6u);
  EXPECT_TRUE(are_isomorphic(q.group, corpus("S3")).has_value());
  EXPECT_TRUE(q.projection.is_homomorphism());
  for (std::size_t i = 0; i < q.representatives.size(); ++i) {
    EXPECT_EQ(q.projection(q.representatives[i]), i);
  }
}

TEST(Quotients, RejectsNonNormal) {
  auto s3 = corpus("S3");
  std::vector<Elem> seed{1};
  auto S = subgroup_closure(s3, seed);
  ASSERT_EQ(S.order(), 2u);
  EXPECT_THROW(quotient(s3, S), InputError);
}

TEST(Isomorphism, SmallCases) {
  EXPECT_TRUE(are_isomorphic(corpus("D3"), corpus("S3")).has_value());
  EXPECT_FALSE(are_isomorphic(corpus("D4"), corpus("Q8")).has_value());
  EXPECT_FALSE(are_isomorphic(corpus("C8"), corpus("C2xC4")).has_value());
  EXPECT_FALSE(are_isomorphic(corpus("C6"), corpus("S3")).has_value());
  auto iso = are_isomorphic(corpus("C2xC2"), elaborate(*dihedral(2)));
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(iso->is_homomorphism());
  EXPECT_TRUE(iso->is_bijective());
}

TEST(Isomorphism, SeriesEquivalence) {
  auto G = corpus("C2xC4");
  auto K1 = subgroup_closure(G, std::vector<Elem>{4});
  auto K2 = subgroup_closure(G, std::vector<Elem>{2});
  auto K3 = subgroup_closure(G, std::vector<Elem>{6});
  EXPECT_FALSE(series_equivalent(G, K1, K2));
  EXPECT_TRUE(series_equivalent(G, K1, K3));
  auto s3 = corpus("S3");
  auto T = subgroup_closure(s3, std::vector<Elem>{1});
  EXPECT_THROW(series_equivalent(s3, T, T), InputError);
}

TEST(Isomorphism, InducedGroupAndClosedSet) {
  auto s4 = corpus("S4");
  auto a4 = commutator_subgroup(s4);
  auto ind = induced_group(a4);
  EXPECT_TRUE(are_isomorphic(ind.group, corpus("A4")).has_value());
  EXPECT_TRUE(ind.embedding.is_homomorphism());
  auto g = group_from_closed_set("a4", a4.elements, [&](Elem x, Elem y) { return s4->mul(x, y); }, kIdentity);
  EXPECT_EQ(g->order(), 12u);
}

TEST(SetHelpers, ProductsAndKernels) {
  auto G = corpus("C2xC4");
  std::vector<Elem> A{0, 4};
  std::vector<Elem> B{0, 2};
  EXPECT_EQ(product_set(*G, A, B), (std::vector<Elem>{0, 2, 4, 6}));
  EXPECT_EQ(intersection(A, B), (std::vector<Elem>{0}));
  EXPECT_TRUE(is_subset(A, std::vector<Elem>{0, 1, 4}));
  auto q = quotient(G, subgroup_closure(G, A));
  EXPECT_EQ(kernel(q.projection).elements, A);
  EXPECT_EQ(image(q.projection).order(), 4u);
}
