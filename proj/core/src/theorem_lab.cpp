#include "mhol/theorem_lab.hpp"

#include <algorithm>

namespace mhol {

const std::array<std::string_view, kConditionCount> kConditionNames = {
    "kernels-meet-trivially",
    "commutators-in-kernel-product",
    "images-commute",
    "inner-in-image-product",
    "images-meet-trivially",
    "images-centerless-normal",
    "f-image-inner-part",
    "h-image-inner-part",
    "fh-diagonal-normal-copy",
    "g-ker-f-characteristic",
    "g-ker-h-characteristic",
    "g-homomorphism-mod-g-ker-h",
    "g-antihomomorphism-mod-g-ker-f",
    "quotients-by-ker-h-agree",
    "quotients-by-ker-f-agree",
    "quotients-by-kernel-products-agree",
};

bool ConditionReport::all_A() const {
  return std::all_of(A.begin(), A.end(), [](bool b) { return b; });
}

bool ConditionReport::implications_hold() const {
  const bool ab = B_a && B_b;
  return (B_direct == ab) && (!B_c || ab) && (C_d == C_e) && (!C_d || B_c);
}

namespace {

void note(std::vector<Witness>* out, std::string condition, std::vector<Elem> values) {
  if (out != nullptr) out->push_back({std::move(condition), std::move(values)});
}

std::vector<Elem> all_elements(std::size_t n) {
  std::vector<Elem> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Elem>(i);
  return v;
}

// Shared derived data for one entry.
struct EntryData {
  GroupPtr G;
  GroupPtr C;  // Aut carrier
  const AutomorphismGroup* A;
  const std::vector<Elem>& f;
  const std::vector<Elem>& g;
  const std::vector<Elem>& h;
  Subgroup ker_f, ker_h;
  std::vector<Elem> f_image, h_image, diagonal, g_ker_f, g_ker_h, ker_product;

  EntryData(const HolGroup& H, const H0Entry& e)
      : G(H.base()),
        C(H.aut().carrier()),
        A(&H.aut()),
        f(e.triplet.f.images),
        g(e.triplet.g.images),
        h(e.triplet.h.images),
        ker_f(kernel(e.triplet.f)),
        ker_h(kernel(e.triplet.h)) {
    const auto all = all_elements(G->order());
    f_image = image_set(f, all);
    h_image = image_set(h, all);
    std::vector<Elem> d(G->order());
    for (Elem s = 0; s < G->order(); ++s) d[s] = C->mul(f[s], h[s]);
    diagonal = image_set(d, all);
    g_ker_f = image_set(g, ker_f.elements);
    g_ker_h = image_set(g, ker_h.elements);
    ker_product = product_set(*G, ker_f.elements, ker_h.elements);
  }
};

// The set as a normal subgroup of G, or empty if it is not one.
std::optional<Subgroup> as_normal(const GroupPtr& G, const std::vector<Elem>& set) {
  if (!is_subgroup_set(*G, set)) return std::nullopt;
  Subgroup S{G, set};
  if (!is_normal(G, S)) return std::nullopt;
  return S;
}

bool centerless_subgroup(const GroupPtr& C, const std::vector<Elem>& set) {
  return is_centerless(induced_group(Subgroup{C, set}).group);
}

// g(st) K == g(s) g(t) K (hom) or g(t) g(s) K (anti) for all s, t.
bool induces_map_mod(const EntryData& d, const Subgroup& K, bool anti, std::vector<Witness>* w,
                     const std::string& label) {
  const auto& G = *d.G;
  for (Elem s = 0; s < G.order(); ++s) {
    for (Elem t = 0; t < G.order(); ++t) {
      const Elem lhs = d.g[G.mul(s, t)];
      const Elem rhs = anti ? G.mul(d.g[t], d.g[s]) : G.mul(d.g[s], d.g[t]);
      if (!K.contains(G.mul(G.inv(lhs), rhs))) {
        note(w, label, {s, t});
        return false;
      }
    }
  }
  return true;
}

bool quotients_isomorphic(const GroupPtr& G, const std::vector<Elem>& X, const std::vector<Elem>& Y) {
  auto x = as_normal(G, X);
  auto y = as_normal(G, Y);
  if (!x || !y) return false;
  return are_isomorphic(quotient(G, *x).group, quotient(G, *y).group).has_value();
}

}  // namespace

std::array<bool, kConditionCount> check_A(const HolGroup& H, const H0Entry& e, std::vector<Witness>* w) {
  const EntryData d(H, e);
  const auto& G = *d.G;
  const auto& C = *d.C;
  std::array<bool, kConditionCount> out{};
  auto label = [](std::size_t i) { return std::string(kConditionNames[i]); };

  // 1
  {
    const auto meet = intersection(d.ker_f.elements, d.ker_h.elements);
    out[0] = meet.size() == 1;
    if (!out[0]) note(w, label(0), {meet[1]});
  }
  // 2
  {
    const auto comm = commutator_subgroup(d.G);
    out[1] = is_subset(comm.elements, d.ker_product);
    if (!out[1]) {
      for (Elem c : comm.elements) {
        if (!std::binary_search(d.ker_product.begin(), d.ker_product.end(), c)) {
          note(w, label(1), {c});
          break;
        }
      }
    }
  }
  // 3
  out[2] = true;
  for (Elem a : d.f_image) {
    for (Elem b : d.h_image) {
      if (out[2] && C.mul(a, b) != C.mul(b, a)) {
        out[2] = false;
        note(w, label(2), {a, b});
      }
    }
  }
  // 4
  {
    const auto fh = product_set(C, d.f_image, d.h_image);
    out[3] = is_subset(d.A->inner().elements, fh);
    if (!out[3]) note(w, label(3), {});
  }
  // 5
  {
    const auto meet = intersection(d.f_image, d.h_image);
    out[4] = meet.size() == 1;
    if (!out[4]) note(w, label(4), {meet[1]});
  }
  // 6
  {
    const Subgroup fs{d.C, d.f_image};
    const Subgroup hs{d.C, d.h_image};
    out[5] = is_normal(d.C, fs) && is_normal(d.C, hs) && centerless_subgroup(d.C, d.f_image) &&
             centerless_subgroup(d.C, d.h_image);
    if (!out[5]) note(w, label(5), {});
  }
  // 7, 8
  {
    const auto& inner = d.A->inner().elements;
    out[6] = intersection(d.f_image, inner) == image_set(d.f, d.ker_product);
    if (!out[6]) note(w, label(6), {});
    out[7] = intersection(d.h_image, inner) == image_set(d.h, d.ker_product);
    if (!out[7]) note(w, label(7), {});
  }
  // 9
  {
    bool ok = is_subgroup_set(C, d.diagonal);
    if (ok) {
      const Subgroup P{d.C, d.diagonal};
      ok = is_normal(d.C, P) && are_isomorphic(induced_group(P).group, d.G).has_value();
    }
    out[8] = ok;
    if (!ok) note(w, label(8), {});
  }
  // 10, 11
  auto characteristic_copy = [&](const std::vector<Elem>& image, const Subgroup& ker, std::size_t idx) {
    bool ok = is_subgroup_set(G, image);
    if (ok) {
      const Subgroup S{d.G, image};
      ok = is_characteristic(*d.A, S) &&
           are_isomorphic(induced_group(S).group, induced_group(ker).group).has_value();
    }
    out[idx] = ok;
    if (!ok) note(w, label(idx), {});
  };
  characteristic_copy(d.g_ker_f, d.ker_f, 9);
  characteristic_copy(d.g_ker_h, d.ker_h, 10);
  // 12, 13
  auto induced_onto = [&](const std::vector<Elem>& K, bool anti, std::size_t idx) {
    auto normalK = as_normal(d.G, K);
    if (!normalK) {
      out[idx] = false;
      note(w, label(idx), {});
      return;
    }
    bool ok = induces_map_mod(d, *normalK, anti, w, label(idx));
    if (ok) {
      const auto q = quotient(d.G, *normalK);
      std::vector<char> hit(q.group->order(), 0);
      for (Elem s = 0; s < G.order(); ++s) {
        const Elem v = anti ? G.inv(d.g[s]) : d.g[s];
        hit[q.projection.images[v]] = 1;
      }
      ok = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
      if (!ok) note(w, label(idx), {});
    }
    out[idx] = ok;
  };
  induced_onto(d.g_ker_h, false, 11);
  induced_onto(d.g_ker_f, true, 12);
  // 14, 15, 16
  out[13] = quotients_isomorphic(d.G, d.ker_h.elements, d.g_ker_h);
  if (!out[13]) note(w, label(13), {});
  out[14] = quotients_isomorphic(d.G, d.ker_f.elements, d.g_ker_f);
  if (!out[14]) note(w, label(14), {});
  out[15] = quotients_isomorphic(d.G, d.ker_product, product_set(G, d.g_ker_f, d.g_ker_h));
  if (!out[15]) note(w, label(15), {});
  return out;
}

BFlags check_B(const HolGroup& H, const H0Entry& e, std::vector<Witness>* w) {
  const EntryData d(H, e);
  const auto& G = *d.G;
  BFlags out;
  out.direct = H.membership(compose(e.g0, e.g0)).has_value();
  out.a = induces_map_mod(d, d.ker_f, true, w, "B-anti-homomorphism-mod-ker-f");
  out.b = induces_map_mod(d, d.ker_h, false, w, "B-homomorphism-mod-ker-h");
  out.c = is_subset(d.g_ker_f, d.ker_f.elements) && is_subset(d.g_ker_h, d.ker_h.elements);
  if (!out.c) note(w, "B-kernels-preserved", {});
  (void)G;
  return out;
}

CFlags check_C(const HolGroup& H, const H0Entry& e, std::vector<Witness>* w) {
  const EntryData d(H, e);
  CFlags out;
  out.d = d.diagonal == d.A->inner().elements;
  if (!out.d) note(w, "C-diagonal-is-inner", {});
  auto K = as_normal(d.G, d.ker_product);
  out.e = K && is_elementary_2_abelian(*quotient(d.G, *K).group);
  if (!out.e) note(w, "C-quotient-elementary-2-abelian", {});
  return out;
}

bool check_lemma_normal(const HolGroup& H, const H0Entry& e, Elem phi, std::vector<Witness>* w) {
  const auto& G = *H.base();
  const auto& C = *H.aut().carrier();
  const auto& f = e.triplet.f.images;
  const auto& g = e.triplet.g.images;
  const auto& h = e.triplet.h.images;
  std::vector<Elem> g_inv(G.order());
  for (Elem s = 0; s < G.order(); ++s) g_inv[g[s]] = s;
  const Elem phi_inv = C.inv(phi);
  for (Elem s = 0; s < G.order(); ++s) {
    const Elem s_phi = g_inv[H.aut().apply(phi, g[s])];
    if (C.mul(C.mul(phi, f[s]), phi_inv) != f[s_phi] || C.mul(C.mul(phi, h[s]), phi_inv) != h[s_phi]) {
      note(w, "simultaneous-normality", {phi, s, s_phi});
      return false;
    }
  }
  return true;
}

bool check_relations(const HolGroup& H, const H0Entry& e, std::vector<Witness>* w) {
  const auto& G = *H.base();
  const auto& A = H.aut();
  const auto& C = *A.carrier();
  const auto& f = e.triplet.f.images;
  const auto& g = e.triplet.g.images;
  const auto& h = e.triplet.h.images;
  if (!e.triplet.f.is_homomorphism()) {
    note(w, "f-homomorphism", {});
    return false;
  }
  if (!e.triplet.h.is_homomorphism()) {
    note(w, "h-homomorphism", {});
    return false;
  }
  if (!e.triplet.g.is_bijective() || g[kIdentity] != kIdentity) {
    note(w, "g-bijective", {});
    return false;
  }
  for (Elem s = 0; s < G.order(); ++s) {
    if (h[s] != C.mul(A.conj(g[s]), f[s])) {
      note(w, "h-definition", {s});
      return false;
    }
    for (Elem t = 0; t < G.order(); ++t) {
      const Elem gst = g[G.mul(s, t)];
      if (gst != G.mul(g[s], A.apply(f[s], g[t]))) {
        note(w, "cocycle-law", {s, t});
        return false;
      }
      if (gst != G.mul(A.apply(h[s], g[t]), g[s])) {
        note(w, "dual-law", {s, t});
        return false;
      }
    }
  }
  return true;
}

bool check_kernel_product(const HolGroup& H, const H0Entry& e, std::vector<Witness>* w) {
  const EntryData d(H, e);
  const bool ok = product_set(*d.G, d.g_ker_f, d.g_ker_h) == image_set(d.g, d.ker_product);
  if (!ok) note(w, "kernel-product", {});
  return ok;
}

bool check_commutator_factorization(const HolGroup& H, const H0Entry& e, std::vector<Witness>* w) {
  const EntryData d(H, e);
  const auto& G = *d.G;
  for (Elem s = 0; s < G.order(); ++s) {
    for (Elem t = 0; t < G.order(); ++t) {
      const Elem c = G.commutator(s, t);
      const bool found = std::any_of(d.ker_f.elements.begin(), d.ker_f.elements.end(),
                                     [&](Elem zf) { return d.ker_h.contains(G.mul(zf, c)); });
      if (!found) {
        note(w, "commutator-factorization", {s, t});
        return false;
      }
    }
  }
  return true;
}

ConditionReport verify_entry(const HolGroup& H, const H0Entry& e) {
  ConditionReport r;
  r.entry_id = e.id;
  r.centerless = is_centerless(H.base());
  r.A = check_A(H, e, &r.witnesses);
  const auto b = check_B(H, e, &r.witnesses);
  r.B_direct = b.direct;
  r.B_a = b.a;
  r.B_b = b.b;
  r.B_c = b.c;
  const auto c = check_C(H, e, &r.witnesses);
  r.C_d = c.d;
  r.C_e = c.e;
  r.relations = check_relations(H, e, &r.witnesses);
  r.simultaneous_normal = true;
  for (Elem phi : H.aut().carrier()->generators()) {
    r.simultaneous_normal = check_lemma_normal(H, e, phi, &r.witnesses) && r.simultaneous_normal;
  }
  r.kernel_product = check_kernel_product(H, e, &r.witnesses);
  r.commutator_factorization = check_commutator_factorization(H, e, &r.witnesses);
  return r;
}

std::vector<ConditionReport> verify_all(const HolGroup& H, std::span<const H0Entry> entries, const Executor* exec) {
  std::vector<ConditionReport> out(entries.size());
  executor_or_default(exec).parallel_for(entries.size(), [&](std::size_t i) { out[i] = verify_entry(H, entries[i]); });
  return out;
}

}  // namespace mhol
