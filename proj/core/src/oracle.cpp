#include "mhol/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>

namespace mhol {

namespace {

// Four bits per point; the degree cap keeps this well inside 64 bits.
std::uint64_t encode(const std::vector<Elem>& images) {
  std::uint64_t key = 0;
  for (Elem v : images) key = (key << 4) | v;
  return key;
}

}  // namespace

bool SymGroupSlice::contains(const Perm& p) const { return std::binary_search(elements.begin(), elements.end(), p); }

SymGroupSlice brute_normalizer(std::size_t n, const std::vector<Perm>& S, std::size_t cap, const Executor* exec) {
  if (n > cap || n > 16) {
    throw BudgetExceeded("brute normalizer: degree " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
  std::unordered_set<std::uint64_t> members;
  for (const auto& s : S) members.insert(encode(s.images));
  SymGroupSlice out{n, {}};
  if (n == 0) return out;
  // One slice per image of the point 0; concatenated in order this is
  // lexicographic order.
  std::vector<std::vector<Perm>> parts(n);
  executor_or_default(exec).parallel_for(n, [&](std::size_t first) {
    std::vector<Elem> pi(n);
    pi[0] = static_cast<Elem>(first);
    for (std::size_t i = 1, v = 0; i < n; ++i, ++v) {
      if (v == first) ++v;
      pi[i] = static_cast<Elem>(v);
    }
    std::vector<Elem> pi_inv(n), conj(n);
    do {
      for (std::size_t i = 0; i < n; ++i) pi_inv[pi[i]] = static_cast<Elem>(i);
      bool ok = true;
      for (const auto& s : S) {
        // (pi s pi^-1)(x) = pi(s(pi^-1(x)))
        for (std::size_t x = 0; x < n; ++x) conj[x] = pi[s.images[pi_inv[x]]];
        if (!members.count(encode(conj))) {
          ok = false;
          break;
        }
      }
      if (ok) parts[first].push_back(Perm{pi});
    } while (std::next_permutation(pi.begin() + 1, pi.end()));
  });
  for (auto& p : parts) {
    for (auto& q : p) out.elements.push_back(std::move(q));
  }
  return out;
}

std::vector<Perm> lambda_perms(const FiniteGroup& G) {
  std::vector<Perm> out;
  for (Elem s = 0; s < G.order(); ++s) {
    Perm p{std::vector<Elem>(G.order())};
    for (Elem x = 0; x < G.order(); ++x) p.images[x] = G.mul(s, x);
    out.push_back(std::move(p));
  }
  return out;
}

OracleT oracle_T(const FiniteGroup& G, std::size_t cap, const Executor* exec) {
  OracleT out;
  out.hol = brute_normalizer(G.order(), lambda_perms(G), cap, exec);
  out.nhol = brute_normalizer(G.order(), out.hol.elements, cap, exec);
  out.t_order = out.nhol.order() / out.hol.order();
  return out;
}

std::size_t oracle_T_order(const FiniteGroup& G, std::size_t cap) { return oracle_T(G, cap).t_order; }

namespace {

Perm perm_mul(const Perm& a, const Perm& b) {
  Perm out{std::vector<Elem>(a.degree())};
  for (std::size_t x = 0; x < a.degree(); ++x) out.images[x] = a.images[b.images[x]];
  return out;
}

bool fixed_point_free(const Perm& p) {
  for (std::size_t x = 0; x < p.degree(); ++x) {
    if (p.images[x] == x) return false;
  }
  return true;
}

// Closure of `current` and `extra` under multiplication, or empty once it
// stops being semiregular.
std::optional<std::vector<Perm>> semiregular_closure(const std::vector<Perm>& current, const Perm& extra,
                                                     std::size_t n) {
  std::vector<Perm> elems = current;
  std::set<Perm> seen(elems.begin(), elems.end());
  std::vector<Perm> gens{extra};
  for (const auto& c : current) gens.push_back(c);
  if (seen.insert(extra).second) elems.push_back(extra);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      Perm z = perm_mul(elems[i], g);
      if (seen.count(z)) continue;
      if (elems.size() == n) return std::nullopt;
      if (!fixed_point_free(z)) return std::nullopt;
      seen.insert(z);
      elems.push_back(std::move(z));
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

GroupPtr perm_group(const std::vector<Perm>& sorted) {
  // Index elements by position; identity must come first.
  std::vector<Perm> order = sorted;
  const Perm id = identity_perm(sorted.front().degree());
  std::stable_partition(order.begin(), order.end(), [&](const Perm& p) { return p == id; });
  const std::size_t m = order.size();
  std::vector<Elem> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Perm z = perm_mul(order[i], order[j]);
      table[i * m + j] = static_cast<Elem>(std::find(order.begin(), order.end(), z) - order.begin());
    }
  }
  return make_group("regular", m, std::move(table));
}

}  // namespace

RegularSubgroups oracle_regular_subgroups(const FiniteGroup& G, const SymGroupSlice& ambient, std::size_t cap) {
  if (ambient.order() > cap) {
    throw BudgetExceeded("regular subgroup oracle: ambient order " + std::to_string(ambient.order()) +
                         " exceeds cap " + std::to_string(cap));
  }
  const std::size_t n = ambient.degree;
  // Candidates sending 0 to x, per point.
  std::vector<std::vector<const Perm*>> by_point(n);
  for (const auto& p : ambient.elements) {
    if (p.images[0] != 0 && fixed_point_free(p)) by_point[p.images[0]].push_back(&p);
  }
  std::set<std::vector<Perm>> found;
  std::set<std::vector<Perm>> visited;
  auto grow = [&](auto& self, const std::vector<Perm>& current) -> void {
    if (!visited.insert(current).second) return;
    if (current.size() == n) {
      found.insert(current);
      return;
    }
    std::vector<char> hit(n, 0);
    for (const auto& e : current) hit[e.images[0]] = 1;
    const auto x = static_cast<std::size_t>(std::find(hit.begin(), hit.end(), 0) - hit.begin());
    for (const Perm* p : by_point[x]) {
      if (auto next = semiregular_closure(current, *p, n)) self(self, *next);
    }
  };
  grow(grow, {identity_perm(n)});
  RegularSubgroups out;
  out.subgroups.assign(found.begin(), found.end());
  const GroupPtr base = make_group(G.name(), G.order(), std::vector<Elem>(G.table().begin(), G.table().end()));
  for (const auto& S : out.subgroups) {
    if (are_isomorphic(base, perm_group(S))) ++out.isomorphic_to_base;
  }
  return out;
}

RegularSubgroups oracle_regular_subgroups(const HolGroup& H, std::size_t cap) {
  if (H.order() > cap) {
    throw BudgetExceeded("regular subgroup oracle: Hol order " + std::to_string(H.order()) + " exceeds cap " +
                         std::to_string(cap));
  }
  SymGroupSlice slice{H.base()->order(), {}};
  for (Elem i = 0; i < H.order(); ++i) slice.elements.push_back(H.realize(i));
  std::sort(slice.elements.begin(), slice.elements.end());
  return oracle_regular_subgroups(*H.base(), slice, cap);
}

OracleBundle oracle_bundle(const Analysis& main, std::size_t cap, const Executor* exec) {
  const auto& G = *main.group;
  const auto t = oracle_T(G, cap, exec);
  OracleBundle b;
  b.hol_order = t.hol.order();
  b.nhol_order = t.nhol.order();
  b.t_order = t.t_order;
  std::vector<Perm> built;
  for (Elem i = 0; i < main.hol->order(); ++i) built.push_back(main.hol->realize(i));
  std::sort(built.begin(), built.end());
  b.hol_equal = built == t.hol.elements;
  b.t_equal = b.t_order == main.t.order;
  const auto reg = oracle_regular_subgroups(G, t.hol);
  b.regular_total = reg.total();
  b.regular_isomorphic = reg.isomorphic_to_base;
  b.regular_equal = reg.isomorphic_to_base == main.census.subgroups;
  return b;
}

}  // namespace mhol
