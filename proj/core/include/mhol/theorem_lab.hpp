#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mhol/multiple_holomorph.hpp"

namespace mhol {

// Counterexample for one failed condition: the offending elements
// (group elements, carrier indices or both, in the order the check uses).
struct Witness {
  std::string condition;
  std::vector<Elem> values;

  friend bool operator==(const Witness&, const Witness&) = default;
};

inline constexpr std::size_t kConditionCount = 16;

// Short names of the sixteen structural conditions, in order.
extern const std::array<std::string_view, kConditionCount> kConditionNames;

struct ConditionReport {
  std::size_t entry_id = 0;
  bool centerless = false;  // false: the conditions are informative only
  std::array<bool, kConditionCount> A{};
  bool B_direct = false;  // (g0 o g0) lies in Hol(G)
  bool B_a = false;       // g is an anti-homomorphism modulo ker f
  bool B_b = false;       // g is a homomorphism modulo ker h
  bool B_c = false;       // g(ker f) <= ker f and g(ker h) <= ker h
  bool C_d = false;       // { f(s)h(s) } equals Inn(G)
  bool C_e = false;       // G / ker f ker h is elementary 2-abelian
  bool relations = false;         // cocycle law, h definition, dual law, f and h homomorphisms
  bool simultaneous_normal = false;  // conjugation identities for every Aut generator
  bool kernel_product = false;       // g(ker f) g(ker h) = g(ker f ker h)
  bool commutator_factorization = false;
  std::vector<Witness> witnesses;

  bool all_A() const;
  // B_direct <=> (a and b), c => (a and b), d <=> e, d => c.
  bool implications_hold() const;
  // Identities that hold for every G, centerless or not.
  bool general_identities_hold() const { return relations && simultaneous_normal && kernel_product; }
  // Everything mandated when G is centerless.
  bool theorem_holds() const {
    return all_A() && implications_hold() && general_identities_hold() && commutator_factorization;
  }
};

std::array<bool, kConditionCount> check_A(const HolGroup& H, const H0Entry& e, std::vector<Witness>* witnesses = nullptr);

struct BFlags {
  bool direct = false;
  bool a = false;
  bool b = false;
  bool c = false;
};
BFlags check_B(const HolGroup& H, const H0Entry& e, std::vector<Witness>* witnesses = nullptr);

struct CFlags {
  bool d = false;
  bool e = false;
};
CFlags check_C(const HolGroup& H, const H0Entry& e, std::vector<Witness>* witnesses = nullptr);

// phi f(s) phi^-1 = f(s_phi) and phi h(s) phi^-1 = h(s_phi) for every s,
// where g(s_phi) = phi(g(s)).
bool check_lemma_normal(const HolGroup& H, const H0Entry& e, Elem phi, std::vector<Witness>* witnesses = nullptr);

bool check_relations(const HolGroup& H, const H0Entry& e, std::vector<Witness>* witnesses = nullptr);
bool check_kernel_product(const HolGroup& H, const H0Entry& e, std::vector<Witness>* witnesses = nullptr);
// Every commutator [s, t] is z_f^-1 z_h with z_f in ker f, z_h in ker h.
bool check_commutator_factorization(const HolGroup& H, const H0Entry& e, std::vector<Witness>* witnesses = nullptr);

ConditionReport verify_entry(const HolGroup& H, const H0Entry& e);
std::vector<ConditionReport> verify_all(const HolGroup& H, std::span<const H0Entry> entries,
                                        const Executor* exec = nullptr);

}  // namespace mhol
