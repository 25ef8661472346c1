#pragma once

#include <cstdint>
#include <vector>

#include "mhol/multiple_holomorph.hpp"

namespace mhol {

// Brute-force reference computations inside Sym(G). Nothing here reuses
// the automorphism, triplet or normal-subgroup searches.

inline constexpr std::size_t kOracleDegreeCap = 8;

// A set of permutations of {0..degree-1}, sorted.
struct SymGroupSlice {
  std::size_t degree = 0;
  std::vector<Perm> elements;

  std::size_t order() const noexcept { return elements.size(); }
  bool contains(const Perm& p) const;
};

// { pi in Sym(n) : pi S pi^-1 = S }, by walking all n! permutations in
// lexicographic order. Throws BudgetExceeded when n > cap.
SymGroupSlice brute_normalizer(std::size_t n, const std::vector<Perm>& S, std::size_t cap = kOracleDegreeCap,
                               const Executor* exec = nullptr);

// lambda(G) as permutations.
std::vector<Perm> lambda_perms(const FiniteGroup& G);

struct OracleT {
  SymGroupSlice hol;   // Norm(lambda(G))
  SymGroupSlice nhol;  // Norm(Hol(G))
  std::size_t t_order = 0;
};

OracleT oracle_T(const FiniteGroup& G, std::size_t cap = kOracleDegreeCap, const Executor* exec = nullptr);
std::size_t oracle_T_order(const FiniteGroup& G, std::size_t cap = kOracleDegreeCap);

struct RegularSubgroups {
  std::vector<std::vector<Perm>> subgroups;  // each sorted, list sorted
  std::size_t isomorphic_to_base = 0;
  std::size_t total() const noexcept { return subgroups.size(); }
};

// Every regular subgroup of the given permutation group, found by
// growing generated subgroups one point at a time. Throws BudgetExceeded
// when the group has more than `cap` elements.
RegularSubgroups oracle_regular_subgroups(const FiniteGroup& G, const SymGroupSlice& ambient, std::size_t cap = 20000);
RegularSubgroups oracle_regular_subgroups(const HolGroup& H, std::size_t cap = 20000);

// Side-by-side comparison with the main pipeline.
struct OracleBundle {
  std::size_t hol_order = 0;
  std::size_t nhol_order = 0;
  std::size_t t_order = 0;
  bool hol_equal = false;        // brute Norm(lambda(G)) equals the built Hol(G) as sets
  bool t_equal = false;          // t_order equals |H0(G)|
  std::size_t regular_total = 0;
  std::size_t regular_isomorphic = 0;
  bool regular_equal = false;    // matches the distinct subgroups from the triplets
  bool agreement() const noexcept { return hol_equal && t_equal && regular_equal; }
};

OracleBundle oracle_bundle(const Analysis& main, std::size_t cap = kOracleDegreeCap, const Executor* exec = nullptr);

}  // namespace mhol
