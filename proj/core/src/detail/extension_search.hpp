#pragma once

// Backtracking over images of generators. A map on a group G is pinned
// down by its values on generators once a rule for extending across an
// edge x -> x*s is fixed; the search assigns generator values one at a
// time, extends to the subgroup generated so far and rejects as soon as
// the rule is violated inside that subgroup.

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "mhol/group.hpp"
#include "mhol/types.hpp"

namespace mhol::detail {

inline constexpr Elem kUnset = std::numeric_limits<Elem>::max();

struct ExtensionPlan {
  struct Step {
    Elem element;
    Elem parent;
    std::uint32_t gen;
  };
  const FiniteGroup* group = nullptr;
  std::vector<Elem> gens;                 // irredundant, in input order
  std::vector<std::vector<Step>> levels;  // elements first reached at each level
  std::vector<std::vector<Elem>> prefix;  // elements of <gens[0..j]>, j = level
};

ExtensionPlan make_extension_plan(const FiniteGroup& G);
ExtensionPlan make_extension_plan(const FiniteGroup& G, std::span<const Elem> gens);

// extend(value_of_parent, parent, value_of_gen, gen_index) -> value of parent*gen
// candidates(level) -> range of values to try for gens[level]
// done(values) -> false stops the search
// Returns false when stopped early.
template <class Candidates, class Extend, class Done>
bool run_extension_search(const ExtensionPlan& plan, std::size_t target_order, bool injective,
                          Candidates&& candidates, Extend&& extend, Done&& done, Budget* budget) {
  const FiniteGroup& G = *plan.group;
  const std::size_t n = G.order();
  const std::size_t depth = plan.gens.size();
  std::vector<Elem> values(n, kUnset);
  std::vector<Elem> gen_values(depth, kUnset);
  std::vector<char> used(injective ? target_order : 0, 0);
  values[kIdentity] = kIdentity;
  if (injective) used[kIdentity] = 1;

  auto consistent = [&](std::size_t level) {
    const Elem s = plan.gens[level];
    for (Elem x : plan.prefix[level]) {
      if (values[G.mul(x, s)] != extend(values[x], x, gen_values[level], level)) return false;
    }
    for (const auto& step : plan.levels[level]) {
      for (std::size_t i = 0; i < level; ++i) {
        const Elem y = G.mul(step.element, plan.gens[i]);
        if (values[y] != extend(values[step.element], step.element, gen_values[i], i)) return false;
      }
    }
    return true;
  };

  auto recurse = [&](auto& self, std::size_t level) -> bool {
    if (level == depth) return done(std::span<const Elem>(values));
    const auto& steps = plan.levels[level];
    for (Elem cand : candidates(level)) {
      charge(budget);
      gen_values[level] = cand;
      std::size_t assigned = 0;
      bool ok = true;
      for (const auto& step : steps) {
        const Elem v = extend(values[step.parent], step.parent, gen_values[step.gen], step.gen);
        if (injective) {
          if (used[v]) {
            ok = false;
            break;
          }
          used[v] = 1;
        }
        values[step.element] = v;
        ++assigned;
      }
      if (ok && consistent(level)) {
        if (!self(self, level + 1)) return false;
      }
      for (std::size_t k = 0; k < assigned; ++k) {
        const Elem e = steps[k].element;
        if (injective) used[values[e]] = 0;
        values[e] = kUnset;
      }
    }
    return true;
  };
  return recurse(recurse, 0);
}

}  // namespace mhol::detail
