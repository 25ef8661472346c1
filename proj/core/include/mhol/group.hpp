#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mhol/types.hpp"

namespace mhol {

// A finite group given by its multiplication table. Elements are the
// indices 0..n-1 and 0 is the identity. Instances are verified on
// construction and immutable afterwards.
class FiniteGroup {
 public:
  // `table` is row-major, table[x * order + y] = x * y. An empty generator
  // list asks for a small generating set to be chosen automatically.
  // Throws InputError naming the first violated group axiom.
  FiniteGroup(std::string name, std::size_t order, std::vector<Elem> table,
              std::vector<Elem> generators = {}, std::size_t full_assoc_order = 512);

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return n_; }

  Elem mul(Elem x, Elem y) const noexcept { return table_[static_cast<std::size_t>(x) * n_ + y]; }
  Elem inv(Elem x) const noexcept { return inv_[x]; }
  Elem conjugate(Elem g, Elem x) const noexcept { return mul(mul(g, x), inv_[g]); }
  Elem commutator(Elem x, Elem y) const noexcept { return mul(mul(x, y), mul(inv_[x], inv_[y])); }
  Elem power(Elem x, std::uint64_t k) const noexcept;

  // Order of the element x.
  Elem element_order(Elem x) const noexcept { return orders_[x]; }

  std::span<const Elem> generators() const noexcept { return gens_; }
  std::span<const Elem> table() const noexcept { return table_; }
  std::span<const Elem> inverses() const noexcept { return inv_; }

  bool is_abelian() const noexcept;
  std::uint64_t exponent() const noexcept;
  bool is_cyclic() const noexcept;

  // Same table and generators under a different label.
  FiniteGroup renamed(std::string name) const;

 private:
  struct Trusted {};
  FiniteGroup(Trusted, std::string name, std::size_t order, std::vector<Elem> table,
              std::vector<Elem> inv, std::vector<Elem> gens, std::vector<Elem> orders);

  void verify(std::size_t full_assoc_order);

  std::string name_;
  std::size_t n_;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  std::vector<Elem> gens_;
  std::vector<Elem> orders_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

template <class... Args>
GroupPtr make_group(Args&&... args) {
  return std::make_shared<const FiniteGroup>(std::forward<Args>(args)...);
}

// A subgroup stored as a strictly sorted element list of its parent.
struct Subgroup {
  GroupPtr parent;
  std::vector<Elem> elements;

  std::size_t order() const noexcept { return elements.size(); }
  bool contains(Elem x) const;
  bool is_trivial() const noexcept { return elements.size() == 1; }
  bool is_whole() const noexcept { return parent && elements.size() == parent->order(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent.get() == b.parent.get() && a.elements == b.elements;
  }
};

// A total map between two groups stored as an image array.
struct GroupMapping {
  GroupPtr source;
  GroupPtr target;
  std::vector<Elem> images;

  Elem operator()(Elem x) const noexcept { return images[x]; }
  bool is_homomorphism() const;
  bool is_bijective() const;

  friend bool operator==(const GroupMapping& a, const GroupMapping& b) {
    return a.source.get() == b.source.get() && a.target.get() == b.target.get() &&
           a.images == b.images;
  }
};

GroupMapping identity_mapping(const GroupPtr& G);

// Greedy small generating set for the group with the given table.
std::vector<Elem> greedy_generators(std::size_t order, std::span<const Elem> table);

Subgroup trivial_subgroup(const GroupPtr& G);
Subgroup whole_group(const GroupPtr& G);

// Smallest subgroup containing `seed`. Throws InputError on a bad index.
Subgroup subgroup_closure(const GroupPtr& G, std::span<const Elem> seed, Budget* budget = nullptr);
Subgroup normal_closure(const GroupPtr& G, std::span<const Elem> seed, Budget* budget = nullptr);

// Wraps a sorted-or-not element list after checking it is a subgroup.
Subgroup make_subgroup(const GroupPtr& G, std::vector<Elem> elements);
// True when the set is nonempty and closed under multiplication.
bool is_subgroup_set(const FiniteGroup& G, std::span<const Elem> sorted_elements);

Subgroup center(const GroupPtr& G);
Subgroup commutator_subgroup(const GroupPtr& G);
bool is_normal(const GroupPtr& G, const Subgroup& S);
bool is_centerless(const GroupPtr& G);

std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& G);

// Every normal subgroup whose order passes `order_filter`, sorted by
// (order, elements). Throws BudgetExceeded past `step_limit` closure steps.
std::vector<Subgroup> normal_subgroups(const GroupPtr& G,
                                       const std::function<bool(std::size_t)>& order_filter = {},
                                       std::uint64_t step_limit = Caps{}.budget,
                                       Budget* counter = nullptr);

struct Quotient {
  GroupPtr group;
  GroupMapping projection;
  // representatives[i] is the minimum element of coset i.
  std::vector<Elem> representatives;
};

// Coset group G/N. Throws InputError when N is not normal.
Quotient quotient(const GroupPtr& G, const Subgroup& N);

struct InducedGroup {
  GroupPtr group;
  GroupMapping embedding;
};

// The subgroup S as a group in its own right, element i = S.elements[i].
InducedGroup induced_group(const Subgroup& S);
// Same, for a closed element set of a group that is only known via `mul`.
GroupPtr group_from_closed_set(std::string name, std::span<const Elem> sorted_elements,
                               const std::function<Elem(Elem, Elem)>& mul, Elem identity);

// First isomorphism G -> H in lexicographic image order, if any.
std::optional<GroupMapping> are_isomorphic(const GroupPtr& G, const GroupPtr& H);

bool is_elementary_2_abelian(const FiniteGroup& G);

// K1 ~ K2 and G/K1 ~ G/K2. Throws InputError on non-normal input.
bool series_equivalent(const GroupPtr& G, const Subgroup& K1, const Subgroup& K2);

// Set helpers on sorted element lists.
std::vector<Elem> product_set(const FiniteGroup& G, std::span<const Elem> A, std::span<const Elem> B);
std::vector<Elem> intersection(std::span<const Elem> A, std::span<const Elem> B);
bool is_subset(std::span<const Elem> A, std::span<const Elem> B);
std::vector<Elem> image_set(std::span<const Elem> images, std::span<const Elem> subset);
// Preimage of {target} under the mapping, i.e. its kernel for target = 0.
Subgroup kernel(const GroupMapping& f);
Subgroup image(const GroupMapping& f);

}  // namespace mhol
