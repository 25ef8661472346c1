#include "mhol/multiple_holomorph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "detail/extension_search.hpp"

namespace mhol {

std::vector<Triplet> enumerate_regular_triplets(const HolGroup& H, Budget* budget, const Executor* exec,
                                                RegularCensus* census) {
  const GroupPtr& G = H.base();
  const AutomorphismGroup& A = H.aut();
  const auto homs = enumerate_homomorphisms(G, A.carrier(), {}, budget, exec);
  const auto plan = detail::make_extension_plan(*G);
  std::vector<Elem> nonidentity(G->order() > 0 ? G->order() - 1 : 0);
  std::iota(nonidentity.begin(), nonidentity.end(), Elem{1});

  std::vector<std::vector<std::vector<Elem>>> solutions(homs.size());
  executor_or_default(exec).parallel_for(homs.size(), [&](std::size_t k) {
    const auto& f = homs[k].images;
    detail::run_extension_search(
        plan, G->order(), true, [&](std::size_t) -> const std::vector<Elem>& { return nonidentity; },
        [&](Elem vp, Elem p, Elem vg, std::size_t) { return G->mul(vp, A.apply(f[p], vg)); },
        [&](std::span<const Elem> values) {
          solutions[k].emplace_back(values.begin(), values.end());
          return true;
        },
        budget);
  });

  std::vector<Triplet> out;
  for (std::size_t k = 0; k < homs.size(); ++k) {
    std::sort(solutions[k].begin(), solutions[k].end());
    for (auto& g : solutions[k]) {
      std::vector<Elem> h(G->order());
      for (Elem s = 0; s < G->order(); ++s) h[s] = A.carrier()->mul(A.conj(g[s]), homs[k].images[s]);
      out.push_back({homs[k], GroupMapping{G, G, std::move(g)}, GroupMapping{G, A.carrier(), std::move(h)}});
    }
  }
  std::sort(out.begin(), out.end(), [](const Triplet& a, const Triplet& b) {
    if (a.f.images != b.f.images) return a.f.images < b.f.images;
    return a.g.images < b.g.images;
  });
  if (census != nullptr) {
    census->homomorphisms = homs.size();
    census->triplets = out.size();
  }
  return out;
}

std::vector<Elem> triplet_subgroup(const HolGroup& H, const Triplet& t) {
  std::vector<Elem> out(H.base()->order());
  for (Elem s = 0; s < H.base()->order(); ++s) out[s] = H.index({t.g.images[s], t.f.images[s]});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool normal_in_hol(const HolGroup& H, const std::vector<Elem>& subgroup) {
  for (Elem t : H.generators()) {
    const Elem t_inv = H.inv(t);
    for (Elem u : subgroup) {
      if (!std::binary_search(subgroup.begin(), subgroup.end(), H.mul(H.mul(t, u), t_inv))) return false;
    }
  }
  return true;
}

Perm g0_of(const FiniteGroup& G, const GroupMapping& g) {
  Perm p{std::vector<Elem>(G.order())};
  for (Elem s = 0; s < G.order(); ++s) p.images[s] = G.inv(g.images[s]);
  return p;
}

}  // namespace

std::vector<H0Entry> compute_H0(const HolGroup& H, const std::vector<Triplet>& triplets, RegularCensus* census) {
  const GroupPtr& G = H.base();
  // Representative per subgroup: the triplet with the smallest g array.
  std::map<std::vector<Elem>, std::size_t> by_subgroup;
  for (std::size_t i = 0; i < triplets.size(); ++i) {
    auto sub = triplet_subgroup(H, triplets[i]);
    auto [it, inserted] = by_subgroup.emplace(std::move(sub), i);
    if (!inserted && triplets[i].g.images < triplets[it->second].g.images) it->second = i;
  }
  const auto lambda = lambda_subgroup(H);
  const auto rho = rho_subgroup(H);
  std::vector<std::pair<std::vector<Elem>, std::size_t>> normal;
  for (const auto& [sub, idx] : by_subgroup) {
    if (normal_in_hol(H, sub)) normal.emplace_back(sub, idx);
  }
  if (census != nullptr) {
    census->subgroups = by_subgroup.size();
    census->normal = normal.size();
  }
  std::sort(normal.begin(), normal.end(), [&](const auto& a, const auto& b) {
    const bool la = a.first == lambda;
    const bool lb = b.first == lambda;
    if (la != lb) return la;
    return triplets[a.second].g.images < triplets[b.second].g.images;
  });
  if (normal.empty() || normal.front().first != lambda) {
    throw ConsistencyError("lambda(" + G->name() + ") missing from H0");
  }
  if (std::none_of(normal.begin(), normal.end(), [&](const auto& e) { return e.first == rho; })) {
    throw ConsistencyError("rho(" + G->name() + ") missing from H0");
  }
  std::vector<H0Entry> entries;
  for (std::size_t id = 0; id < normal.size(); ++id) {
    const auto& [sub, idx] = normal[id];
    const Triplet& t = triplets[idx];
    auto as_group = group_from_closed_set("N" + std::to_string(id), sub,
                                          [&](Elem x, Elem y) { return H.mul(x, y); }, kIdentity);
    std::vector<Elem> witness(G->order());
    for (Elem s = 0; s < G->order(); ++s) {
      const Elem beta = H.index({t.g.images[s], t.f.images[s]});
      witness[s] = static_cast<Elem>(std::lower_bound(sub.begin(), sub.end(), beta) - sub.begin());
    }
    GroupMapping iso{G, as_group, std::move(witness)};
    if (!iso.is_homomorphism() || !iso.is_bijective()) {
      throw ConsistencyError("H0 entry " + std::to_string(id) + " is not isomorphic to " + G->name());
    }
    entries.push_back({id, t, sub, std::move(iso), g0_of(*G, t.g)});
  }
  return entries;
}

std::vector<H0Entry> compute_H0(const HolGroup& H, Budget* budget, const Executor* exec, RegularCensus* census) {
  const auto triplets = enumerate_regular_triplets(H, budget, exec, census);
  return compute_H0(H, triplets, census);
}

std::optional<std::vector<Elem>> conjugated_lambda(const HolGroup& H, const Perm& p) {
  const FiniteGroup& G = *H.base();
  if (p.degree() != G.order() || !p.is_bijection()) return std::nullopt;
  const Perm p_inv = inverse(p);
  std::vector<Elem> out;
  out.reserve(G.order());
  Perm image{std::vector<Elem>(G.order())};
  for (Elem s = 0; s < G.order(); ++s) {
    for (Elem x = 0; x < G.order(); ++x) image.images[x] = p(G.mul(s, p_inv(x)));
    const auto member = H.membership(image);
    if (!member) return std::nullopt;
    out.push_back(H.index(*member));
  }
  std::sort(out.begin(), out.end());
  return out;
}

TGroupReport t_group(const HolGroup& H, std::vector<H0Entry> entries) {
  const std::size_t m = entries.size();
  std::map<std::vector<Elem>, std::size_t> lookup;
  for (const auto& e : entries) lookup.emplace(e.subgroup, e.id);
  std::vector<Elem> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto conj = conjugated_lambda(H, compose(entries[i].g0, entries[j].g0));
      auto it = conj ? lookup.find(*conj) : lookup.end();
      if (it == lookup.end()) {
        throw ConsistencyError("T(" + H.base()->name() + "): product of classes " + std::to_string(i) + " and " +
                               std::to_string(j) + " is not in H0");
      }
      table[i * m + j] = static_cast<Elem>(it->second);
    }
  }
  TGroupReport report;
  try {
    report.group = make_group("T(" + H.base()->name() + ")", m, std::move(table));
  } catch (const InputError& e) {
    throw ConsistencyError(std::string("T table is not a group: ") + e.what());
  }
  const auto rho = rho_subgroup(H);
  report.identity_id = entries.front().id;
  report.iota_id = lookup.at(rho);
  report.order = m;
  report.is_abelian = report.group->is_abelian();
  report.exponent = report.group->exponent();
  report.is_elementary_2_abelian = is_elementary_2_abelian(*report.group);
  report.is_cyclic = report.group->is_cyclic();
  report.entries = std::move(entries);
  return report;
}

std::optional<std::size_t> coset_identify(const HolGroup& H, const Perm& p, std::span<const H0Entry> entries) {
  const auto conj = conjugated_lambda(H, p);
  if (!conj) return std::nullopt;
  for (const auto& e : entries) {
    if (e.subgroup == *conj) return e.id;
  }
  return std::nullopt;
}

Analysis analyze(const GroupPtr& G, const Caps& caps, const Executor* exec) {
  Budget budget(caps.budget, "analysis of " + G->name());
  Analysis out;
  out.group = G;
  out.aut = std::make_shared<const AutomorphismGroup>(automorphism_group(G, caps, &budget, exec));
  out.hol = std::make_shared<const HolGroup>(build_holomorph(G, out.aut, caps));
  auto entries = compute_H0(*out.hol, &budget, exec, &out.census);
  out.t = t_group(*out.hol, std::move(entries));
  out.steps = budget.used();
  return out;
}

}  // namespace mhol
