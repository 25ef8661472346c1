#pragma once

#include <string>
#include <vector>

#include "mhol/executor.hpp"
#include "mhol/morphism.hpp"

namespace mhol {

// Screening filter for centerless groups. A group with no witness has
// elementary 2-abelian T(G); a witness only means the filter could not
// decide.
struct ScreenWitness {
  Subgroup K1, K2;  // normal subgroups of G
  Subgroup Q1, Q2;  // normal subgroups of the Aut carrier
};

struct ScreenReport {
  std::string name;
  std::size_t order = 0;
  bool centerless = false;
  std::size_t kset = 0;       // proper non-trivial normal K with G/K centerless
  std::size_t kset_char = 0;  // of which fixed by the non-inner Aut generators
  // Candidates where the generator test and the full characteristic test
  // disagree. Always zero in a correct build.
  std::size_t char_disagreements = 0;
  std::size_t k12 = 0;
  std::vector<std::size_t> qord;
  std::size_t qset = 0;
  std::size_t iso_to_g = 0;
  std::size_t q12 = 0;
  std::vector<ScreenWitness> witnesses;
  bool passed = true;
  std::uint64_t steps = 0;
};

ScreenReport screen_group(const GroupPtr& G, const Caps& caps = {}, const Executor* exec = nullptr);
// Reuses an Aut(G) already computed by the caller.
ScreenReport screen_group(const AutomorphismGroup& A, const Caps& caps = {}, const Executor* exec = nullptr);

// Rechecks every screening predicate for one witness by brute force
// over all elements, without the screen's own subgroup machinery.
bool reverify_witness(const AutomorphismGroup& A, const ScreenWitness& w, const Caps& caps = {});

}  // namespace mhol
