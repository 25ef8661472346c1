#include "mhol/holomorph.hpp"

#include <algorithm>
#include <numeric>

namespace mhol {

bool Perm::is_bijection() const {
  std::vector<char> seen(images.size(), 0);
  for (Elem y : images) {
    if (y >= images.size() || seen[y]) return false;
    seen[y] = 1;
  }
  return true;
}

Perm identity_perm(std::size_t n) {
  Perm p{std::vector<Elem>(n)};
  std::iota(p.images.begin(), p.images.end(), Elem{0});
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm out{std::vector<Elem>(b.images.size())};
  for (std::size_t x = 0; x < b.images.size(); ++x) out.images[x] = a.images[b.images[x]];
  return out;
}

Perm inverse(const Perm& p) {
  Perm out{std::vector<Elem>(p.images.size())};
  for (std::size_t x = 0; x < p.images.size(); ++x) out.images[p.images[x]] = static_cast<Elem>(x);
  return out;
}

Perm lambda_perm(const FiniteGroup& G, Elem sigma) {
  Perm p{std::vector<Elem>(G.order())};
  for (Elem x = 0; x < G.order(); ++x) p.images[x] = G.mul(sigma, x);
  return p;
}

Perm rho_perm(const FiniteGroup& G, Elem sigma) {
  Perm p{std::vector<Elem>(G.order())};
  const Elem s_inv = G.inv(sigma);
  for (Elem x = 0; x < G.order(); ++x) p.images[x] = G.mul(x, s_inv);
  return p;
}

Perm inversion_perm(const FiniteGroup& G) {
  const auto inv = G.inverses();
  return Perm{std::vector<Elem>(inv.begin(), inv.end())};
}

HolGroup::HolGroup(GroupPtr base, std::shared_ptr<const AutomorphismGroup> aut)
    : base_(std::move(base)), aut_(std::move(aut)) {
  for (Elem s : base_->generators()) {
    if (s != kIdentity) gens_.push_back(rho(s));
  }
  for (Elem phi : aut_->carrier()->generators()) {
    if (phi != kIdentity) gens_.push_back(index({kIdentity, phi}));
  }
  if (gens_.empty()) gens_.push_back(kIdentity);
}

Elem HolGroup::mul(Elem x, Elem y) const noexcept {
  const auto [a, phi] = element(x);
  const auto [b, psi] = element(y);
  return index({base_->mul(a, aut_->apply(phi, b)), aut_->carrier()->mul(phi, psi)});
}

Elem HolGroup::inv(Elem x) const noexcept {
  const auto [a, phi] = element(x);
  const Elem phi_inv = aut_->carrier()->inv(phi);
  return index({aut_->apply(phi_inv, base_->inv(a)), phi_inv});
}

Perm HolGroup::realize(Elem i) const {
  Perm p{std::vector<Elem>(base_->order())};
  for (Elem x = 0; x < base_->order(); ++x) p.images[x] = apply(i, x);
  return p;
}

std::optional<HolElement> HolGroup::membership(const Perm& p) const {
  const std::size_t n = base_->order();
  if (p.images.size() != n) return std::nullopt;
  // p(1) = phi(1) a^-1 = a^-1.
  const Elem a_inv = p.images[kIdentity];
  if (a_inv >= n) return std::nullopt;
  const Elem a = base_->inv(a_inv);
  std::vector<Elem> phi(n);
  for (Elem x = 0; x < n; ++x) {
    if (p.images[x] >= n) return std::nullopt;
    phi[x] = base_->mul(p.images[x], a);
  }
  const auto found = aut_->find(phi);
  if (!found) return std::nullopt;
  return HolElement{a, *found};
}

std::vector<Elem> lambda_subgroup(const HolGroup& H) {
  std::vector<Elem> out;
  for (Elem s = 0; s < H.base()->order(); ++s) out.push_back(H.lambda(s));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> rho_subgroup(const HolGroup& H) {
  std::vector<Elem> out;
  for (Elem s = 0; s < H.base()->order(); ++s) out.push_back(H.rho(s));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<HolElement> hol_membership(const HolGroup& H, const Perm& p) { return H.membership(p); }

namespace {

bool regular_on_base(const HolGroup& H, std::span<const Elem> elements) {
  std::vector<char> hit(H.base()->order(), 0);
  for (Elem e : elements) {
    const Elem at = H.apply(e, kIdentity);
    if (hit[at]) return false;
    hit[at] = 1;
  }
  return elements.size() == H.base()->order();
}

}  // namespace

HolGroup build_holomorph(const GroupPtr& G, std::shared_ptr<const AutomorphismGroup> aut, const Caps& caps) {
  const std::size_t total = G->order() * aut->order();
  if (total > caps.max_hol) {
    throw BudgetExceeded("Hol(" + G->name() + ") has " + std::to_string(total) + " elements, above the cap " +
                         std::to_string(caps.max_hol));
  }
  HolGroup H(G, std::move(aut));
  const std::size_t n = G->order();
  for (Elem e = 0; e < total; ++e) {
    for (Elem s : H.generators()) {
      const Elem es = H.mul(e, s);
      for (Elem x = 0; x < n; ++x) {
        if (H.apply(es, x) != H.apply(e, H.apply(s, x))) {
          throw ConsistencyError("Hol(" + G->name() + ") product does not match composition");
        }
      }
    }
    if (H.mul(e, H.inv(e)) != kIdentity) throw ConsistencyError("Hol(" + G->name() + ") inverse is wrong");
  }
  if (!regular_on_base(H, lambda_subgroup(H)) || !regular_on_base(H, rho_subgroup(H))) {
    throw ConsistencyError("lambda(G) or rho(G) is not regular");
  }
  for (Elem s = 0; s < n; ++s) {
    for (Elem t = 0; t < n; ++t) {
      if (H.mul(H.lambda(s), H.rho(t)) != H.mul(H.rho(t), H.lambda(s))) {
        throw ConsistencyError("lambda(G) and rho(G) do not commute");
      }
    }
  }
  return H;
}

}  // namespace mhol
