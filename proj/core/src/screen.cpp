#include "mhol/screen.hpp"

#include <algorithm>
#include <set>

namespace mhol {

namespace {

bool quotient_centerless(const GroupPtr& G, const Subgroup& K) { return is_centerless(quotient(G, K).group); }

}  // namespace

ScreenReport screen_group(const GroupPtr& G, const Caps& caps, const Executor* exec) {
  Budget budget(caps.budget, "automorphisms of " + G->name());
  const auto A = automorphism_group(G, caps, &budget, exec);
  auto report = screen_group(A, caps, exec);
  report.steps += budget.used();
  return report;
}

ScreenReport screen_group(const AutomorphismGroup& A, const Caps& caps, const Executor* exec) {
  const GroupPtr& G = A.base();
  const std::size_t n = G->order();
  ScreenReport r;
  r.name = G->name();
  r.order = n;
  r.centerless = is_centerless(G);
  if (!r.centerless) return r;

  Budget budget(caps.budget, "screen of " + G->name());
  const auto normals = normal_subgroups(G, {}, caps.budget, &budget);

  std::vector<Subgroup> kset;
  for (const auto& K : normals) {
    if (K.order() == 1 || K.order() == n) continue;
    if (quotient_centerless(G, K)) kset.push_back(K);
  }
  r.kset = kset.size();

  const auto outer = A.outer_generators();
  std::vector<Subgroup> kchar;
  for (const auto& K : kset) {
    const bool by_outer = std::all_of(outer.begin(), outer.end(), [&](Elem a) {
      for (Elem x : K.elements) {
        if (!K.contains(A.apply(a, x))) return false;
      }
      return true;
    });
    if (by_outer != is_characteristic(A, K)) ++r.char_disagreements;
    if (by_outer) kchar.push_back(K);
  }
  r.kset_char = kchar.size();

  const auto comm = commutator_subgroup(G);
  // Ordered pairs, evaluated in parallel and kept in (i, j) order.
  const std::size_t m = kchar.size();
  std::vector<char> keep(m * m, 0);
  executor_or_default(exec).parallel_for(m * m, [&](std::size_t idx) {
    const auto& K1 = kchar[idx / m];
    const auto& K2 = kchar[idx % m];
    if (intersection(K1.elements, K2.elements).size() != 1) return;
    const auto joined = subgroup_closure(G, product_set(*G, K1.elements, K2.elements));
    if (!is_subset(comm.elements, joined.elements)) return;
    if (quotient(G, joined).group->exponent() <= 2) return;
    const bool twin = std::any_of(kset.begin(), kset.end(), [&](const Subgroup& K) {
      return !(K == K1) && series_equivalent(G, K, K1);
    });
    if (twin) keep[idx] = 1;
  });
  std::vector<std::pair<std::size_t, std::size_t>> k12;
  for (std::size_t idx = 0; idx < m * m; ++idx) {
    if (keep[idx]) k12.emplace_back(idx / m, idx % m);
  }
  r.k12 = k12.size();
  r.steps = budget.used();
  // Nothing downstream can produce a witness without a K pair.
  if (k12.empty()) return r;

  std::set<std::size_t> qord;
  for (auto [i, j] : k12) {
    qord.insert(n / kchar[i].order());
    qord.insert(n / kchar[j].order());
  }
  r.qord.assign(qord.begin(), qord.end());

  const GroupPtr& C = A.carrier();
  const auto aut_normals = normal_subgroups(C, [n](std::size_t k) { return n % k == 0; }, caps.budget, &budget);
  std::vector<Subgroup> qset;
  std::vector<Subgroup> iso_to_g;
  for (const auto& Q : aut_normals) {
    const auto induced = induced_group(Q).group;
    if (qord.count(Q.order()) && is_centerless(induced)) qset.push_back(Q);
    if (Q.order() == n && are_isomorphic(G, induced)) iso_to_g.push_back(Q);
  }
  r.qset = qset.size();
  r.iso_to_g = iso_to_g.size();

  std::vector<std::pair<std::size_t, std::size_t>> q12;
  for (std::size_t i = 0; i < qset.size(); ++i) {
    for (std::size_t j = 0; j < qset.size(); ++j) {
      if (intersection(qset[i].elements, qset[j].elements).size() != 1) continue;
      std::vector<Elem> seed = qset[i].elements;
      seed.insert(seed.end(), qset[j].elements.begin(), qset[j].elements.end());
      const auto joined = subgroup_closure(C, seed, &budget);
      const auto inside = std::count_if(iso_to_g.begin(), iso_to_g.end(), [&](const Subgroup& N) {
        return is_subset(N.elements, joined.elements);
      });
      if (inside >= 2) q12.emplace_back(i, j);
    }
  }
  r.q12 = q12.size();

  for (auto [i, j] : k12) {
    const auto quot1 = quotient(G, kchar[i]).group;
    const auto quot2 = quotient(G, kchar[j]).group;
    for (auto [a, b] : q12) {
      if (quot1->order() != qset[a].order() || quot2->order() != qset[b].order()) continue;
      if (are_isomorphic(quot1, induced_group(qset[a]).group) && are_isomorphic(quot2, induced_group(qset[b]).group)) {
        r.witnesses.push_back({kchar[i], kchar[j], qset[a], qset[b]});
      }
    }
  }
  r.passed = r.witnesses.empty();
  r.steps = budget.used();
  return r;
}

namespace {

// Brute-force helpers on plain element lists.
bool contains(const std::vector<Elem>& s, Elem x) { return std::find(s.begin(), s.end(), x) != s.end(); }

bool brute_normal(const FiniteGroup& G, const std::vector<Elem>& S) {
  for (Elem g = 0; g < G.order(); ++g) {
    for (Elem x : S) {
      if (!contains(S, G.mul(G.mul(g, x), G.inv(g)))) return false;
    }
  }
  for (Elem x : S) {
    for (Elem y : S) {
      if (!contains(S, G.mul(x, y))) return false;
    }
  }
  return contains(S, kIdentity);
}

bool brute_centerless(const FiniteGroup& G, const std::vector<Elem>& S) {
  for (Elem z : S) {
    if (z == kIdentity) continue;
    if (std::all_of(S.begin(), S.end(), [&](Elem x) { return G.mul(z, x) == G.mul(x, z); })) return false;
  }
  return true;
}

std::vector<Elem> brute_join(const FiniteGroup& G, const std::vector<Elem>& A, const std::vector<Elem>& B) {
  std::vector<char> in(G.order(), 0);
  std::vector<Elem> out{kIdentity};
  in[kIdentity] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto* src : {&A, &B}) {
      for (Elem y : *src) {
        const Elem z = G.mul(out[i], y);
        if (!in[z]) {
          in[z] = 1;
          out.push_back(z);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool meet_trivial(const std::vector<Elem>& A, const std::vector<Elem>& B) {
  return std::none_of(A.begin(), A.end(), [&](Elem x) { return x != kIdentity && contains(B, x); });
}

}  // namespace

bool reverify_witness(const AutomorphismGroup& A, const ScreenWitness& w, const Caps& caps) {
  const GroupPtr& G = A.base();
  const GroupPtr& C = A.carrier();
  const std::size_t n = G->order();
  const auto& K1 = w.K1.elements;
  const auto& K2 = w.K2.elements;
  const auto& Q1 = w.Q1.elements;
  const auto& Q2 = w.Q2.elements;
  for (const auto* K : {&K1, &K2}) {
    if (K->size() <= 1 || K->size() >= n || !brute_normal(*G, *K)) return false;
    for (Elem a = 0; a < A.order(); ++a) {
      for (Elem x : *K) {
        if (!contains(*K, A.apply(a, x))) return false;
      }
    }
    if (!is_centerless(quotient(G, Subgroup{G, *K}).group)) return false;
  }
  if (!meet_trivial(K1, K2)) return false;
  const auto KK = brute_join(*G, K1, K2);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (!contains(KK, G->commutator(x, y))) return false;
    }
  }
  // Some element of G has order > 2 modulo K1 K2.
  bool big = false;
  for (Elem x = 0; x < n && !big; ++x) big = !contains(KK, G->mul(x, x));
  if (!big) return false;
  for (const auto* Q : {&Q1, &Q2}) {
    if (n % Q->size() != 0 || !brute_normal(*C, *Q) || !brute_centerless(*C, *Q)) return false;
  }
  if (!meet_trivial(Q1, Q2)) return false;
  const auto QQ = brute_join(*C, Q1, Q2);
  // At least two normal copies of G inside <Q1, Q2>; the inner ones are one.
  auto all = normal_subgroups(C, [n](std::size_t k) { return k == n; }, caps.budget);
  std::size_t copies = 0;
  for (const auto& N : all) {
    if (!is_subset(N.elements, QQ)) continue;
    if (are_isomorphic(G, induced_group(N).group)) ++copies;
  }
  if (copies < 2) return false;
  return are_isomorphic(quotient(G, w.K1).group, induced_group(w.Q1).group) &&
         are_isomorphic(quotient(G, w.K2).group, induced_group(w.Q2).group);
}

}  // namespace mhol
