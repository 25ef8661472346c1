#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "mhol/executor.hpp"
#include "mhol/group.hpp"

namespace mhol {

// All homomorphisms G -> H accepted by `accept`, in search order:
// generator images ascend by (element order, index). The search is split
// over the image of the first generator when `exec` is wider than one.
std::vector<GroupMapping> enumerate_homomorphisms(const GroupPtr& G, const GroupPtr& H,
                                                  const std::function<bool(const GroupMapping&)>& accept = {},
                                                  Budget* budget = nullptr, const Executor* exec = nullptr);

// Aut(G) as an abstract group whose elements are realized as maps on G.
// Composition convention, fixed everywhere: carrier a*b is realize(a) after
// realize(b), i.e. (a*b)(x) = a(b(x)).
class AutomorphismGroup {
 public:
  AutomorphismGroup(GroupPtr base, std::vector<std::vector<Elem>> automorphisms, const Caps& caps);

  const GroupPtr& base() const noexcept { return base_; }
  const GroupPtr& carrier() const noexcept { return carrier_; }
  std::size_t order() const noexcept { return carrier_->order(); }

  Elem apply(Elem a, Elem x) const noexcept { return images_[static_cast<std::size_t>(a) * n_ + x]; }
  std::span<const Elem> images(Elem a) const noexcept {
    return {images_.data() + static_cast<std::size_t>(a) * n_, n_};
  }
  GroupMapping realize(Elem a) const;

  Elem conj(Elem sigma) const noexcept { return conj_.images[sigma]; }
  const GroupMapping& conj_map() const noexcept { return conj_; }
  const Subgroup& inner() const noexcept { return inner_; }

  // Carrier index of the map with these images, if it is an automorphism.
  std::optional<Elem> find(std::span<const Elem> images) const;

  // Elements of the carrier generating set that are not inner.
  std::vector<Elem> outer_generators() const;

 private:
  std::vector<Elem> key_of(std::span<const Elem> images) const;

  GroupPtr base_;
  std::size_t n_;
  std::vector<Elem> key_gens_;
  std::vector<Elem> images_;
  std::map<std::vector<Elem>, Elem> index_;
  GroupPtr carrier_;
  GroupMapping conj_;
  Subgroup inner_;
};

// Throws BudgetExceeded when |Aut(G)| passes caps.max_aut or caps.max_table.
AutomorphismGroup automorphism_group(const GroupPtr& G, const Caps& caps = {}, Budget* budget = nullptr,
                                     const Executor* exec = nullptr);

// Invariant under every carrier generator.
bool is_characteristic(const AutomorphismGroup& A, const Subgroup& S);

}  // namespace mhol
