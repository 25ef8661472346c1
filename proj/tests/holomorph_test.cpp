#include <gtest/gtest.h>

#include <algorithm>

#include "mhol/holomorph.hpp"
#include "support.hpp"

using namespace mhol;
using mhol::test::corpus;

namespace {

HolGroup hol_of(const std::string& name) {
  auto G = corpus(name);
  auto A = std::make_shared<const AutomorphismGroup>(automorphism_group(G));
  return build_holomorph(G, A);
}

std::vector<Perm> realized_sorted(const HolGroup& H, const std::vector<Elem>& ids) {
  std::vector<Perm> out;
  for (Elem i : ids) out.push_back(H.realize(i));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Perm, ComposeAndInverse) {
  Perm a{{1, 2, 0}};
  Perm b{{0, 2, 1}};
  EXPECT_EQ(compose(a, b).images, (std::vector<Elem>{1, 0, 2}));
  EXPECT_EQ(compose(a, inverse(a)), identity_perm(3));
  EXPECT_TRUE(a.is_bijection());
  EXPECT_FALSE((Perm{{0, 0, 1}}).is_bijection());
}

TEST(Holomorph, Orders) {
  EXPECT_EQ(hol_of("C5").order(), 20u);
  EXPECT_EQ(hol_of("S3").order(), 36u);
  EXPECT_EQ(hol_of("C2xC2").order(), 24u);
  EXPECT_EQ(hol_of("A5").order(), 7200u);
}

TEST(Holomorph, ProductMatchesComposition) {
  auto H = hol_of("D4");
  for (Elem x = 0; x < H.order(); ++x) {
    for (Elem y = 0; y < H.order(); y += 7) {
      ASSERT_EQ(H.realize(H.mul(x, y)), compose(H.realize(x), H.realize(y)));
    }
    ASSERT_EQ(H.realize(H.inv(x)), inverse(H.realize(x)));
  }
}

TEST(Holomorph, MembershipRoundTrips) {
  auto H = hol_of("Q8");
  for (Elem i = 0; i < H.order(); ++i) {
    auto e = H.membership(H.realize(i));
    ASSERT_TRUE(e.has_value());
    EXPECT_EQ(H.index(*e), i);
  }
  // Exactly |Hol(S3)| of the 720 permutations of S3 are members.
  auto S = hol_of("S3");
  Perm p = identity_perm(6);
  std::size_t members = 0;
  do {
    members += S.membership(p).has_value();
  } while (std::next_permutation(p.images.begin(), p.images.end()));
  EXPECT_EQ(members, 36u);
}

TEST(Holomorph, LambdaAndRhoAreRegularAndCommute) {
  auto H = hol_of("S4");
  const auto& G = *H.base();
  for (Elem s = 0; s < G.order(); ++s) {
    EXPECT_EQ(H.realize(H.lambda(s)), lambda_perm(G, s));
    EXPECT_EQ(H.realize(H.rho(s)), rho_perm(G, s));
    for (Elem t = 0; t < G.order(); t += 5) {
      EXPECT_EQ(H.mul(H.lambda(s), H.rho(t)), H.mul(H.rho(t), H.lambda(s)));
    }
  }
  EXPECT_EQ(lambda_subgroup(H).size(), 24u);
}

// rho(G) = iota lambda(G) iota^-1 with iota the inversion map.
TEST(Holomorph, InversionConjugatesLambdaOntoRho) {
  for (const auto& e : load_catalog(MHOL_TEST_CATALOG)) {
    if (e.tier != "default") continue;
    auto H = hol_of(e.name);
    const auto& G = *H.base();
    const Perm iota = inversion_perm(G);
    std::vector<Perm> conj;
    for (Elem s = 0; s < G.order(); ++s) conj.push_back(compose(compose(iota, lambda_perm(G, s)), inverse(iota)));
    std::sort(conj.begin(), conj.end());
    EXPECT_EQ(conj, realized_sorted(H, rho_subgroup(H))) << e.name;
  }
}

TEST(Holomorph, HolCap) {
  auto G = corpus("A5");
  auto A = std::make_shared<const AutomorphismGroup>(automorphism_group(G));
  Caps caps;
  caps.max_hol = 1000;
  EXPECT_THROW(build_holomorph(G, A, caps), BudgetExceeded);
}
