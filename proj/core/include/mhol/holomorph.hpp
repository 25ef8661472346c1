#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "mhol/morphism.hpp"

namespace mhol {

// A permutation of the element set of a group.
struct Perm {
  std::vector<Elem> images;

  Elem operator()(Elem x) const noexcept { return images[x]; }
  std::size_t degree() const noexcept { return images.size(); }
  bool is_bijection() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;
};

Perm identity_perm(std::size_t n);
// (a * b)(x) = a(b(x)).
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);

// x -> sigma x
Perm lambda_perm(const FiniteGroup& G, Elem sigma);
// x -> x sigma^-1
Perm rho_perm(const FiniteGroup& G, Elem sigma);
// x -> x^-1
Perm inversion_perm(const FiniteGroup& G);

// rho(a) phi, i.e. x -> phi(x) a^-1.
struct HolElement {
  Elem a;
  Elem phi;

  friend bool operator==(const HolElement&, const HolElement&) = default;
};

// Hol(G) = rho(G) x| Aut(G). Elements are indexed a * |Aut| + phi; that
// layout is part of the report format. The group is never tabulated;
// products are computed from the pair law
//   (a, phi)(b, psi) = (a phi(b), phi psi).
class HolGroup {
 public:
  HolGroup(GroupPtr base, std::shared_ptr<const AutomorphismGroup> aut);

  const GroupPtr& base() const noexcept { return base_; }
  const AutomorphismGroup& aut() const noexcept { return *aut_; }
  const std::shared_ptr<const AutomorphismGroup>& aut_ptr() const noexcept { return aut_; }
  std::size_t order() const noexcept { return base_->order() * aut_->order(); }

  Elem index(HolElement e) const noexcept { return e.a * static_cast<Elem>(aut_->order()) + e.phi; }
  HolElement element(Elem i) const noexcept {
    const auto m = static_cast<Elem>(aut_->order());
    return {i / m, i % m};
  }

  Elem mul(Elem x, Elem y) const noexcept;
  Elem inv(Elem x) const noexcept;

  // Image of the point x under the realized permutation of element i.
  Elem apply(Elem i, Elem x) const noexcept {
    const auto e = element(i);
    return base_->mul(aut_->apply(e.phi, x), base_->inv(e.a));
  }
  Perm realize(Elem i) const;

  Elem lambda(Elem sigma) const noexcept { return index({base_->inv(sigma), aut_->conj(sigma)}); }
  Elem rho(Elem sigma) const noexcept { return index({sigma, kIdentity}); }

  // rho of the generators of G followed by the Aut generators.
  const std::vector<Elem>& generators() const noexcept { return gens_; }

  std::optional<HolElement> membership(const Perm& p) const;

 private:
  GroupPtr base_;
  std::shared_ptr<const AutomorphismGroup> aut_;
  std::vector<Elem> gens_;
};

// Sorted Hol indices of lambda(G) and rho(G).
std::vector<Elem> lambda_subgroup(const HolGroup& H);
std::vector<Elem> rho_subgroup(const HolGroup& H);

// Builds Hol(G) and checks its invariants. Throws BudgetExceeded past
// caps.max_hol and ConsistencyError if an invariant fails.
HolGroup build_holomorph(const GroupPtr& G, std::shared_ptr<const AutomorphismGroup> aut, const Caps& caps = {});

std::optional<HolElement> hol_membership(const HolGroup& H, const Perm& p);

}  // namespace mhol
