#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "mhol/holomorph.hpp"

namespace mhol {

// One regular subgroup N = { rho(g(s)) f(s) : s in G } of Hol(G).
//   f, h : G -> Aut(G) carrier, homomorphisms
//   g    : G -> G, bijective with g(1) = 1
//   g(st) = g(s) f(s)(g(t)),   h(s) = conj(g(s)) f(s)
struct Triplet {
  GroupMapping f;
  GroupMapping g;
  GroupMapping h;
};

struct H0Entry {
  std::size_t id = 0;
  Triplet triplet;
  std::vector<Elem> subgroup;  // sorted Hol indices
  GroupMapping iso_witness;    // G -> subgroup as a group
  Perm g0;                     // inversion after g; conjugates lambda(G) onto the subgroup
};

struct TGroupReport {
  std::vector<H0Entry> entries;
  GroupPtr group;  // Cayley table over entry ids
  std::size_t identity_id = 0;
  std::size_t iota_id = 0;
  std::size_t order = 0;
  bool is_abelian = false;
  std::uint64_t exponent = 1;
  bool is_elementary_2_abelian = false;
  bool is_cyclic = false;

  std::size_t product(std::size_t i, std::size_t j) const { return group->mul(static_cast<Elem>(i), static_cast<Elem>(j)); }
};

struct RegularCensus {
  std::size_t homomorphisms = 0;  // |Hom(G, Aut(G))|
  std::size_t triplets = 0;
  std::size_t subgroups = 0;  // distinct regular subgroups isomorphic to G
  std::size_t normal = 0;     // of which normal in Hol(G)
};

// Every (f, g) with f in Hom(G, Aut(G)) and g a bijective solution of the
// cocycle law, sorted by (f, g). Parallel over f.
std::vector<Triplet> enumerate_regular_triplets(const HolGroup& H, Budget* budget = nullptr,
                                                const Executor* exec = nullptr,
                                                RegularCensus* census = nullptr);

// Sorted Hol indices of { rho(g(s)) f(s) }.
std::vector<Elem> triplet_subgroup(const HolGroup& H, const Triplet& t);

// Normal regular subgroups of Hol(G) isomorphic to G, lambda(G) first and
// then ordered by the g array of their representative triplet.
std::vector<H0Entry> compute_H0(const HolGroup& H, const std::vector<Triplet>& triplets,
                                RegularCensus* census = nullptr);
std::vector<H0Entry> compute_H0(const HolGroup& H, Budget* budget = nullptr, const Executor* exec = nullptr,
                                RegularCensus* census = nullptr);

// p lambda(G) p^-1 as sorted Hol indices, or empty when it leaves Hol(G).
std::optional<std::vector<Elem>> conjugated_lambda(const HolGroup& H, const Perm& p);

TGroupReport t_group(const HolGroup& H, std::vector<H0Entry> entries);

// Entry id of p lambda(G) p^-1, or empty when p is not in NHol(G).
std::optional<std::size_t> coset_identify(const HolGroup& H, const Perm& p, std::span<const H0Entry> entries);

// Full pipeline: Aut(G), Hol(G), triplets, H0(G) and T(G).
struct Analysis {
  GroupPtr group;
  std::shared_ptr<const AutomorphismGroup> aut;
  std::shared_ptr<const HolGroup> hol;
  RegularCensus census;
  TGroupReport t;
  std::uint64_t steps = 0;
};

Analysis analyze(const GroupPtr& G, const Caps& caps = {}, const Executor* exec = nullptr);

}  // namespace mhol
