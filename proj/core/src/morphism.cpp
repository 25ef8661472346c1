#include "mhol/morphism.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>

#include "detail/extension_search.hpp"

namespace mhol {

namespace {

// Elements of H whose order divides (or equals) `order`, sorted by (order, index).
std::vector<Elem> image_candidates(const FiniteGroup& H, Elem order, bool exact) {
  std::vector<Elem> out;
  for (Elem y = 0; y < H.order(); ++y) {
    const Elem o = H.element_order(y);
    if (exact ? o == order : order % o == 0) out.push_back(y);
  }
  std::stable_sort(out.begin(), out.end(),
                   [&](Elem a, Elem b) { return H.element_order(a) < H.element_order(b); });
  return out;
}

struct HomSearch {
  const GroupPtr& G;
  const GroupPtr& H;
  bool exact_order;
  bool injective;
};

// Runs the search split over level-0 candidates; `emit` collects per-root
// results which are concatenated in root order.
std::vector<std::vector<Elem>> search_homs(const HomSearch& spec, Budget* budget, const Executor* exec,
                                           const std::function<bool(std::span<const Elem>)>& keep,
                                           std::size_t max_results = 0) {
  const auto plan = detail::make_extension_plan(*spec.G);
  std::vector<std::vector<Elem>> candidates(plan.gens.size());
  for (std::size_t j = 0; j < plan.gens.size(); ++j) {
    candidates[j] = image_candidates(*spec.H, spec.G->element_order(plan.gens[j]), spec.exact_order);
  }
  std::vector<std::vector<Elem>> out;
  if (plan.gens.empty()) {
    std::vector<Elem> trivial(spec.G->order(), kIdentity);
    if (keep(trivial)) out.push_back(std::move(trivial));
    return out;
  }
  const auto& roots = candidates[0];
  std::vector<std::vector<std::vector<Elem>>> per_root(roots.size());
  std::atomic<std::size_t> total{0};
  executor_or_default(exec).parallel_for(roots.size(), [&](std::size_t r) {
    const std::vector<Elem> root{roots[r]};
    auto& sink = per_root[r];
    detail::run_extension_search(
        plan, spec.H->order(), spec.injective,
        [&](std::size_t level) -> const std::vector<Elem>& { return level == 0 ? root : candidates[level]; },
        [&](Elem vp, Elem, Elem vg, std::size_t) { return spec.H->mul(vp, vg); },
        [&](std::span<const Elem> values) {
          if (keep(values)) {
            sink.emplace_back(values.begin(), values.end());
            if (max_results != 0 && total.fetch_add(1) + 1 > max_results) {
              throw BudgetExceeded("more than " + std::to_string(max_results) + " maps from " +
                                   spec.G->name() + " to " + spec.H->name());
            }
          }
          return true;
        },
        budget);
  });
  for (auto& chunk : per_root) {
    for (auto& m : chunk) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

std::vector<GroupMapping> enumerate_homomorphisms(const GroupPtr& G, const GroupPtr& H,
                                                  const std::function<bool(const GroupMapping&)>& accept,
                                                  Budget* budget, const Executor* exec) {
  std::mutex accept_mutex;
  auto raw = search_homs(
      {G, H, false, false}, budget, exec,
      [&](std::span<const Elem> values) {
        if (!accept) return true;
        GroupMapping m{G, H, std::vector<Elem>(values.begin(), values.end())};
        std::lock_guard lock(accept_mutex);
        return accept(m);
      });
  std::vector<GroupMapping> out;
  out.reserve(raw.size());
  for (auto& images : raw) out.push_back({G, H, std::move(images)});
  return out;
}

// ---------------------------------------------------------------------------
// AutomorphismGroup

AutomorphismGroup::AutomorphismGroup(GroupPtr base, std::vector<std::vector<Elem>> automorphisms,
                                     const Caps& caps)
    : base_(std::move(base)), n_(base_->order()) {
  const auto plan = detail::make_extension_plan(*base_);
  key_gens_ = plan.gens;
  std::sort(automorphisms.begin(), automorphisms.end());
  const std::size_t m = automorphisms.size();
  if (m == 0) throw ConsistencyError("automorphism list is empty");
  if (m > caps.max_table) {
    throw BudgetExceeded("Aut(" + base_->name() + ") has " + std::to_string(m) +
                         " elements, above the table cap " + std::to_string(caps.max_table));
  }
  images_.reserve(m * n_);
  for (std::size_t a = 0; a < m; ++a) {
    images_.insert(images_.end(), automorphisms[a].begin(), automorphisms[a].end());
    if (!index_.emplace(key_of(automorphisms[a]), static_cast<Elem>(a)).second) {
      throw ConsistencyError("duplicate automorphism of " + base_->name());
    }
  }
  if (!std::is_sorted(automorphisms.front().begin(), automorphisms.front().end()) ||
      automorphisms.front().back() != n_ - 1) {
    throw ConsistencyError("identity automorphism missing from Aut(" + base_->name() + ")");
  }
  std::vector<Elem> table(m * m);
  std::vector<Elem> key(key_gens_.size());
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t i = 0; i < key_gens_.size(); ++i) {
        key[i] = apply(static_cast<Elem>(a), apply(static_cast<Elem>(b), key_gens_[i]));
      }
      auto it = index_.find(key);
      if (it == index_.end()) throw ConsistencyError("Aut(" + base_->name() + ") not closed under composition");
      table[a * m + b] = it->second;
    }
  }
  carrier_ = make_group("Aut(" + base_->name() + ")", m, std::move(table), std::vector<Elem>{},
                        caps.full_assoc_order);
  std::vector<Elem> conj_images(n_);
  for (Elem s = 0; s < n_; ++s) {
    for (std::size_t i = 0; i < key_gens_.size(); ++i) key[i] = base_->conjugate(s, key_gens_[i]);
    conj_images[s] = index_.at(key);
  }
  conj_ = GroupMapping{base_, carrier_, std::move(conj_images)};
  inner_ = image(conj_);

  // Realization respects the carrier product, checked on carrier generators.
  for (Elem a = 0; a < m; ++a) {
    for (Elem s : carrier_->generators()) {
      const Elem as = carrier_->mul(a, s);
      for (Elem x = 0; x < n_; ++x) {
        if (apply(as, x) != apply(a, apply(s, x))) {
          throw ConsistencyError("Aut(" + base_->name() + ") realization is not a homomorphism");
        }
      }
    }
  }
  if (!conj_.is_homomorphism()) throw ConsistencyError("conj is not a homomorphism");
  for (Elem s = 0; s < n_; ++s) {
    for (Elem x = 0; x < n_; ++x) {
      if (apply(conj_.images[s], x) != base_->conjugate(s, x)) {
        throw ConsistencyError("conj does not realize conjugation");
      }
    }
  }
}

std::vector<Elem> AutomorphismGroup::key_of(std::span<const Elem> images) const {
  std::vector<Elem> key(key_gens_.size());
  for (std::size_t i = 0; i < key_gens_.size(); ++i) key[i] = images[key_gens_[i]];
  return key;
}

std::optional<Elem> AutomorphismGroup::find(std::span<const Elem> images) const {
  if (images.size() != n_) return std::nullopt;
  auto it = index_.find(key_of(images));
  if (it == index_.end()) return std::nullopt;
  const auto ref = this->images(it->second);
  if (!std::equal(ref.begin(), ref.end(), images.begin())) return std::nullopt;
  return it->second;
}

GroupMapping AutomorphismGroup::realize(Elem a) const {
  const auto im = images(a);
  return {base_, base_, std::vector<Elem>(im.begin(), im.end())};
}

std::vector<Elem> AutomorphismGroup::outer_generators() const {
  std::vector<Elem> out;
  for (Elem a : carrier_->generators()) {
    if (!inner_.contains(a)) out.push_back(a);
  }
  return out;
}

AutomorphismGroup automorphism_group(const GroupPtr& G, const Caps& caps, Budget* budget, const Executor* exec) {
  auto autos = search_homs(
      {G, G, true, true}, budget, exec, [](std::span<const Elem>) { return true; }, caps.max_aut);
  return AutomorphismGroup(G, std::move(autos), caps);
}

bool is_characteristic(const AutomorphismGroup& A, const Subgroup& S) {
  for (Elem a : A.carrier()->generators()) {
    for (Elem x : S.elements) {
      if (!S.contains(A.apply(a, x))) return false;
    }
  }
  return true;
}

}  // namespace mhol
