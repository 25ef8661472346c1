#include "mhol/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "detail/extension_search.hpp"

namespace mhol {

namespace {

std::string triple(Elem x, Elem y, Elem z) {
  std::ostringstream out;
  out << "(" << x << ", " << y << ", " << z << ")";
  return out.str();
}

// Right-multiplication closure from the identity over `gens` on a raw table.
std::vector<char> closure_mask(std::size_t n, std::span<const Elem> table, std::span<const Elem> gens,
                               std::size_t* size = nullptr) {
  std::vector<char> in(n, 0);
  std::vector<Elem> list{kIdentity};
  in[kIdentity] = 1;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Elem x = list[i];
    for (Elem s : gens) {
      const Elem y = table[static_cast<std::size_t>(x) * n + s];
      if (!in[y]) {
        in[y] = 1;
        list.push_back(y);
      }
    }
  }
  if (size != nullptr) *size = list.size();
  return in;
}

std::vector<Elem> mask_to_list(const std::vector<char>& mask) {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.push_back(static_cast<Elem>(i));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup::FiniteGroup(std::string name, std::size_t order, std::vector<Elem> table,
                         std::vector<Elem> generators, std::size_t full_assoc_order)
    : name_(std::move(name)), n_(order), table_(std::move(table)), gens_(std::move(generators)) {
  verify(full_assoc_order);
}

FiniteGroup::FiniteGroup(Trusted, std::string name, std::size_t order, std::vector<Elem> table,
                         std::vector<Elem> inv, std::vector<Elem> gens, std::vector<Elem> orders)
    : name_(std::move(name)),
      n_(order),
      table_(std::move(table)),
      inv_(std::move(inv)),
      gens_(std::move(gens)),
      orders_(std::move(orders)) {}

FiniteGroup FiniteGroup::renamed(std::string name) const {
  return FiniteGroup(Trusted{}, std::move(name), n_, table_, inv_, gens_, orders_);
}

void FiniteGroup::verify(std::size_t full_assoc_order) {
  const std::size_t n = n_;
  if (n == 0) throw InputError("group '" + name_ + "': order must be positive");
  if (table_.size() != n * n) {
    throw InputError("group '" + name_ + "': table has " + std::to_string(table_.size()) +
                     " entries, expected " + std::to_string(n * n));
  }
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] >= n) {
      throw InputError("group '" + name_ + "': entry " + std::to_string(table_[i]) + " at row " +
                       std::to_string(i / n) + " column " + std::to_string(i % n) +
                       " is out of range");
    }
  }
  for (Elem x = 0; x < n; ++x) {
    if (mul(kIdentity, x) != x || mul(x, kIdentity) != x) {
      throw InputError("group '" + name_ + "': element 0 is not an identity (fails at " +
                       std::to_string(x) + ")");
    }
  }
  // Latin square.
  std::vector<char> seen(n);
  for (Elem x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem y = 0; y < n; ++y) {
      const Elem v = mul(x, y);
      if (seen[v]) {
        throw InputError("group '" + name_ + "': row " + std::to_string(x) +
                         " repeats entry " + std::to_string(v));
      }
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem y = 0; y < n; ++y) {
      const Elem v = mul(y, x);
      if (seen[v]) {
        throw InputError("group '" + name_ + "': column " + std::to_string(x) +
                         " repeats entry " + std::to_string(v));
      }
      seen[v] = 1;
    }
  }
  inv_.assign(n, 0);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (mul(x, y) == kIdentity) {
        inv_[x] = y;
        break;
      }
    }
    if (mul(inv_[x], x) != kIdentity) {
      throw InputError("group '" + name_ + "': element " + std::to_string(x) +
                       " has no two-sided inverse");
    }
  }
  for (Elem s : gens_) {
    if (s >= n) throw InputError("group '" + name_ + "': generator " + std::to_string(s) + " out of range");
  }
  if (gens_.empty()) gens_ = greedy_generators(n, table_);
  if (gens_.empty()) gens_.push_back(kIdentity);
  std::size_t reached = 0;
  closure_mask(n, table_, gens_, &reached);
  if (reached != n) {
    throw InputError("group '" + name_ + "': generators reach only " + std::to_string(reached) + " of " +
                     std::to_string(n) + " elements");
  }
  if (n <= full_assoc_order) {
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        const Elem xy = mul(x, y);
        for (Elem z = 0; z < n; ++z) {
          if (mul(xy, z) != mul(x, mul(y, z))) {
            throw InputError("group '" + name_ + "': associativity fails at " + triple(x, y, z));
          }
        }
      }
    }
  } else {
    // Light's test: (x s) y = x (s y) for generators s is enough once the
    // generators reach every element.
    for (Elem s : gens_) {
      for (Elem x = 0; x < n; ++x) {
        const Elem xs = mul(x, s);
        for (Elem y = 0; y < n; ++y) {
          if (mul(xs, y) != mul(x, mul(s, y))) {
            throw InputError("group '" + name_ + "': associativity fails at " + triple(x, s, y));
          }
        }
      }
    }
  }
  orders_.assign(n, 1);
  for (Elem x = 1; x < n; ++x) {
    Elem k = 1;
    for (Elem p = x; p != kIdentity; p = mul(p, x)) ++k;
    orders_[x] = k;
  }
}

Elem FiniteGroup::power(Elem x, std::uint64_t k) const noexcept {
  k %= orders_[x];
  Elem result = kIdentity;
  Elem base = x;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

bool FiniteGroup::is_abelian() const noexcept {
  for (Elem a : gens_) {
    for (Elem b : gens_) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::uint64_t FiniteGroup::exponent() const noexcept {
  std::uint64_t e = 1;
  for (Elem o : orders_) e = std::lcm(e, static_cast<std::uint64_t>(o));
  return e;
}

bool FiniteGroup::is_cyclic() const noexcept {
  return std::any_of(orders_.begin(), orders_.end(), [&](Elem o) { return o == n_; });
}

// ---------------------------------------------------------------------------
// Subgroups and mappings

bool Subgroup::contains(Elem x) const { return std::binary_search(elements.begin(), elements.end(), x); }

bool GroupMapping::is_homomorphism() const {
  if (images.size() != source->order()) return false;
  for (Elem x : images) {
    if (x >= target->order()) return false;
  }
  for (Elem x = 0; x < source->order(); ++x) {
    for (Elem s : source->generators()) {
      if (images[source->mul(x, s)] != target->mul(images[x], images[s])) return false;
    }
  }
  return images[kIdentity] == kIdentity;
}

bool GroupMapping::is_bijective() const {
  if (images.size() != target->order()) return false;
  std::vector<char> seen(target->order(), 0);
  for (Elem y : images) {
    if (y >= target->order() || seen[y]) return false;
    seen[y] = 1;
  }
  return true;
}

GroupMapping identity_mapping(const GroupPtr& G) {
  std::vector<Elem> images(G->order());
  std::iota(images.begin(), images.end(), Elem{0});
  return {G, G, std::move(images)};
}

std::vector<Elem> greedy_generators(std::size_t n, std::span<const Elem> table) {
  std::vector<Elem> gens;
  if (n <= 1) return gens;
  // First pick: an element of maximal order.
  Elem best = 1;
  std::size_t best_size = 0;
  for (Elem x = 1; x < n; ++x) {
    std::size_t size = 0;
    const Elem one[] = {x};
    closure_mask(n, table, one, &size);
    if (size > best_size) {
      best = x;
      best_size = size;
      if (size == n) break;
    }
  }
  gens.push_back(best);
  auto current = closure_mask(n, table, gens, &best_size);
  while (best_size < n) {
    Elem pick = 0;
    std::size_t pick_size = 0;
    for (Elem x = 1; x < n; ++x) {
      if (current[x]) continue;
      gens.push_back(x);
      std::size_t size = 0;
      closure_mask(n, table, gens, &size);
      gens.pop_back();
      if (size > pick_size) {
        pick = x;
        pick_size = size;
        if (size == n) break;
      }
    }
    gens.push_back(pick);
    current = closure_mask(n, table, gens, &best_size);
  }
  return gens;
}

Subgroup trivial_subgroup(const GroupPtr& G) { return {G, {kIdentity}}; }

Subgroup whole_group(const GroupPtr& G) {
  std::vector<Elem> all(G->order());
  std::iota(all.begin(), all.end(), Elem{0});
  return {G, std::move(all)};
}

Subgroup subgroup_closure(const GroupPtr& G, std::span<const Elem> seed, Budget* budget) {
  const std::size_t n = G->order();
  std::vector<Elem> gens;
  for (Elem s : seed) {
    if (s >= n) throw InputError("subgroup_closure: element " + std::to_string(s) + " out of range");
    if (s != kIdentity) gens.push_back(s);
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::size_t size = 0;
  auto mask = closure_mask(n, G->table(), gens, &size);
  charge(budget, size * std::max<std::size_t>(1, gens.size()));
  return {G, mask_to_list(mask)};
}

Subgroup normal_closure(const GroupPtr& G, std::span<const Elem> seed, Budget* budget) {
  std::vector<Elem> gens(seed.begin(), seed.end());
  while (true) {
    Subgroup S = subgroup_closure(G, gens, budget);
    std::vector<Elem> extra;
    for (Elem g : G->generators()) {
      for (Elem x : gens) {
        const Elem c = G->conjugate(g, x);
        if (!S.contains(c)) extra.push_back(c);
      }
    }
    if (extra.empty()) return S;
    gens.insert(gens.end(), extra.begin(), extra.end());
  }
}

bool is_subgroup_set(const FiniteGroup& G, std::span<const Elem> sorted) {
  if (sorted.empty() || sorted.front() != kIdentity) return false;
  std::vector<char> in(G.order(), 0);
  for (Elem x : sorted) {
    if (x >= G.order()) return false;
    in[x] = 1;
  }
  for (Elem x : sorted) {
    for (Elem y : sorted) {
      if (!in[G.mul(x, y)]) return false;
    }
  }
  return true;
}

Subgroup make_subgroup(const GroupPtr& G, std::vector<Elem> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (!is_subgroup_set(*G, elements)) {
    throw InputError("make_subgroup: element set is not a subgroup of " + G->name());
  }
  return {G, std::move(elements)};
}

Subgroup center(const GroupPtr& G) {
  std::vector<Elem> z;
  for (Elem x = 0; x < G->order(); ++x) {
    bool central = true;
    for (Elem s : G->generators()) {
      if (G->mul(x, s) != G->mul(s, x)) {
        central = false;
        break;
      }
    }
    if (central) z.push_back(x);
  }
  return {G, std::move(z)};
}

bool is_centerless(const GroupPtr& G) { return center(G).is_trivial(); }

Subgroup commutator_subgroup(const GroupPtr& G) {
  std::vector<Elem> seed;
  const auto gens = G->generators();
  for (Elem a : gens) {
    for (Elem b : gens) seed.push_back(G->commutator(a, b));
  }
  return normal_closure(G, seed);
}

bool is_normal(const GroupPtr& G, const Subgroup& S) {
  for (Elem g : G->generators()) {
    for (Elem x : S.elements) {
      if (!S.contains(G->conjugate(g, x))) return false;
    }
  }
  return true;
}

std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& G) {
  const std::size_t n = G.order();
  std::vector<char> done(n, 0);
  std::vector<std::vector<Elem>> classes;
  for (Elem x = 0; x < n; ++x) {
    if (done[x]) continue;
    std::vector<Elem> orbit{x};
    done[x] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (Elem g : G.generators()) {
        const Elem c = G.conjugate(g, orbit[i]);
        if (!done[c]) {
          done[c] = 1;
          orbit.push_back(c);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  return classes;
}

std::vector<Subgroup> normal_subgroups(const GroupPtr& G, const std::function<bool(std::size_t)>& order_filter,
                                       std::uint64_t step_limit, Budget* counter) {
  Budget local(step_limit, "normal subgroups of " + G->name());
  Budget& budget = counter != nullptr ? *counter : local;
  const auto classes = conjugacy_classes(*G);
  // Each normal subgroup is a join of normal closures of single classes;
  // a breadth-first walk over joins reaches all of them.
  std::map<std::vector<Elem>, std::size_t> seen;
  std::vector<Subgroup> found{trivial_subgroup(G)};
  std::vector<std::vector<Elem>> found_gens{{}};
  seen.emplace(found.front().elements, 0);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& cls : classes) {
      if (found[i].contains(cls.front())) continue;
      std::vector<Elem> gens = found_gens[i];
      gens.push_back(cls.front());
      Subgroup joined = normal_closure(G, gens, &budget);
      if (seen.count(joined.elements)) continue;
      seen.emplace(joined.elements, found.size());
      found.push_back(std::move(joined));
      found_gens.push_back(std::move(gens));
    }
  }
  std::vector<Subgroup> out;
  for (auto& S : found) {
    if (!order_filter || order_filter(S.order())) out.push_back(std::move(S));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return out;
}

Quotient quotient(const GroupPtr& G, const Subgroup& N) {
  if (!is_normal(G, N)) throw InputError("quotient: subgroup is not normal in " + G->name());
  const std::size_t n = G->order();
  std::vector<Elem> rep(n, detail::kUnset);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (rep[x] != detail::kUnset) continue;
    // x is the smallest element of its coset since we scan in order.
    for (Elem k : N.elements) rep[G->mul(x, k)] = x;
    reps.push_back(x);
  }
  const std::size_t m = reps.size();
  std::vector<Elem> index_of(n, 0);
  for (std::size_t i = 0; i < m; ++i) index_of[reps[i]] = static_cast<Elem>(i);
  std::vector<Elem> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      table[i * m + j] = index_of[rep[G->mul(reps[i], reps[j])]];
    }
  }
  std::vector<Elem> images(n);
  for (Elem x = 0; x < n; ++x) images[x] = index_of[rep[x]];
  std::vector<Elem> gens;
  for (Elem s : G->generators()) {
    const Elem q = images[s];
    if (q != kIdentity && std::find(gens.begin(), gens.end(), q) == gens.end()) gens.push_back(q);
  }
  auto Q = make_group(G->name() + "/N" + std::to_string(N.order()), m, std::move(table), std::move(gens));
  return {Q, GroupMapping{G, Q, std::move(images)}, std::move(reps)};
}

GroupPtr group_from_closed_set(std::string name, std::span<const Elem> sorted,
                               const std::function<Elem(Elem, Elem)>& mul, Elem identity) {
  const std::size_t m = sorted.size();
  std::vector<Elem> elems(sorted.begin(), sorted.end());
  auto pos = [&](Elem x) -> Elem {
    auto it = std::lower_bound(elems.begin(), elems.end(), x);
    if (it == elems.end() || *it != x) throw InputError("element set of '" + name + "' is not closed");
    return static_cast<Elem>(it - elems.begin());
  };
  // Rotate so that the identity gets index 0.
  const Elem id_pos = pos(identity);
  std::vector<Elem> order_of(m);
  std::iota(order_of.begin(), order_of.end(), Elem{0});
  std::swap(order_of[0], order_of[id_pos]);
  std::vector<Elem> relabel(m);
  for (std::size_t i = 0; i < m; ++i) relabel[order_of[i]] = static_cast<Elem>(i);
  std::vector<Elem> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      table[i * m + j] = relabel[pos(mul(elems[order_of[i]], elems[order_of[j]]))];
    }
  }
  return make_group(std::move(name), m, std::move(table));
}

InducedGroup induced_group(const Subgroup& S) {
  const auto& G = *S.parent;
  const std::size_t m = S.order();
  std::vector<Elem> pos(G.order(), detail::kUnset);
  for (std::size_t i = 0; i < m; ++i) pos[S.elements[i]] = static_cast<Elem>(i);
  std::vector<Elem> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Elem p = pos[G.mul(S.elements[i], S.elements[j])];
      if (p == detail::kUnset) throw InputError("induced_group: element set is not closed");
      table[i * m + j] = p;
    }
  }
  auto H = make_group(G.name() + "<" + std::to_string(m) + ">", m, std::move(table));
  return {H, GroupMapping{H, S.parent, S.elements}};
}

namespace {

std::vector<std::size_t> order_profile(const FiniteGroup& G) {
  std::vector<std::size_t> profile(G.order() + 1, 0);
  for (Elem x = 0; x < G.order(); ++x) ++profile[G.element_order(x)];
  return profile;
}

}  // namespace

std::optional<GroupMapping> are_isomorphic(const GroupPtr& G, const GroupPtr& H) {
  if (G->order() != H->order()) return std::nullopt;
  if (G->is_abelian() != H->is_abelian()) return std::nullopt;
  if (order_profile(*G) != order_profile(*H)) return std::nullopt;
  const auto plan = detail::make_extension_plan(*G);
  std::vector<std::vector<Elem>> candidates(plan.gens.size());
  for (std::size_t j = 0; j < plan.gens.size(); ++j) {
    const Elem want = G->element_order(plan.gens[j]);
    for (Elem y = 0; y < H->order(); ++y) {
      if (H->element_order(y) == want) candidates[j].push_back(y);
    }
  }
  std::optional<GroupMapping> found;
  detail::run_extension_search(
      plan, H->order(), true, [&](std::size_t level) -> const std::vector<Elem>& { return candidates[level]; },
      [&](Elem vp, Elem, Elem vg, std::size_t) { return H->mul(vp, vg); },
      [&](std::span<const Elem> values) {
        found = GroupMapping{G, H, std::vector<Elem>(values.begin(), values.end())};
        return false;
      },
      nullptr);
  return found;
}

bool is_elementary_2_abelian(const FiniteGroup& G) {
  for (Elem x = 0; x < G.order(); ++x) {
    if (G.mul(x, x) != kIdentity) return false;
  }
  return true;
}

bool series_equivalent(const GroupPtr& G, const Subgroup& K1, const Subgroup& K2) {
  if (!is_normal(G, K1) || !is_normal(G, K2)) {
    throw InputError("series_equivalent: subgroups must be normal");
  }
  if (K1.order() != K2.order()) return false;
  if (K1 == K2) return true;
  if (!are_isomorphic(induced_group(K1).group, induced_group(K2).group)) return false;
  return are_isomorphic(quotient(G, K1).group, quotient(G, K2).group).has_value();
}

std::vector<Elem> product_set(const FiniteGroup& G, std::span<const Elem> A, std::span<const Elem> B) {
  std::vector<char> in(G.order(), 0);
  for (Elem a : A) {
    for (Elem b : B) in[G.mul(a, b)] = 1;
  }
  return mask_to_list(in);
}

std::vector<Elem> intersection(std::span<const Elem> A, std::span<const Elem> B) {
  std::vector<Elem> out;
  std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(out));
  return out;
}

bool is_subset(std::span<const Elem> A, std::span<const Elem> B) {
  return std::includes(B.begin(), B.end(), A.begin(), A.end());
}

std::vector<Elem> image_set(std::span<const Elem> images, std::span<const Elem> subset) {
  std::vector<Elem> out;
  out.reserve(subset.size());
  for (Elem x : subset) out.push_back(images[x]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Subgroup kernel(const GroupMapping& f) {
  std::vector<Elem> k;
  for (Elem x = 0; x < f.source->order(); ++x) {
    if (f.images[x] == kIdentity) k.push_back(x);
  }
  return {f.source, std::move(k)};
}

Subgroup image(const GroupMapping& f) {
  std::vector<Elem> all(f.source->order());
  std::iota(all.begin(), all.end(), Elem{0});
  return {f.target, image_set(f.images, all)};
}

// ---------------------------------------------------------------------------
// Extension plans

namespace detail {

ExtensionPlan make_extension_plan(const FiniteGroup& G) { return make_extension_plan(G, G.generators()); }

ExtensionPlan make_extension_plan(const FiniteGroup& G, std::span<const Elem> gens) {
  ExtensionPlan plan;
  plan.group = &G;
  const std::size_t n = G.order();
  std::vector<char> in(n, 0);
  in[kIdentity] = 1;
  std::vector<Elem> members{kIdentity};
  for (Elem s : gens) {
    if (in[s]) continue;
    plan.gens.push_back(s);
    const auto level = static_cast<std::uint32_t>(plan.gens.size() - 1);
    std::vector<ExtensionPlan::Step> steps;
    for (std::size_t i = 0; i < members.size(); ++i) {
      const Elem x = members[i];
      for (std::uint32_t g = 0; g <= level; ++g) {
        const Elem y = G.mul(x, plan.gens[g]);
        if (!in[y]) {
          in[y] = 1;
          members.push_back(y);
          steps.push_back({y, x, g});
        }
      }
    }
    plan.levels.push_back(std::move(steps));
    plan.prefix.push_back(members);
  }
  return plan;
}

}  // namespace detail

}  // namespace mhol
