#include "mhol/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace mhol {

using nlohmann::json;

namespace {

SpecPtr wrap(decltype(GroupSpec::body) body) { return std::make_shared<const GroupSpec>(GroupSpec{std::move(body), {}}); }

std::string kind_name(BuiltinSpec::Kind k) {
  switch (k) {
    case BuiltinSpec::Kind::cyclic: return "cyclic";
    case BuiltinSpec::Kind::dihedral: return "dihedral";
    case BuiltinSpec::Kind::symmetric: return "symmetric";
    case BuiltinSpec::Kind::alternating: return "alternating";
  }
  return "?";
}

void require(bool ok, const std::string& message) {
  if (!ok) throw InputError(message);
}

// Group of permutations given as image arrays, p*q = p after q.
GroupPtr perm_table_group(std::string name, std::vector<std::vector<Elem>> perms, std::vector<Elem> gens,
                          std::size_t full_assoc_order) {
  std::sort(perms.begin(), perms.end());
  std::map<std::vector<Elem>, Elem> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], static_cast<Elem>(i));
  const std::size_t m = perms.size();
  const std::size_t d = m == 0 ? 0 : perms[0].size();
  std::vector<Elem> table(m * m);
  std::vector<Elem> z(d);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t x = 0; x < d; ++x) z[x] = perms[i][perms[j][x]];
      auto it = index.find(z);
      require(it != index.end(), name + ": permutation set is not closed");
      table[i * m + j] = it->second;
    }
  }
  return make_group(std::move(name), m, std::move(table), std::move(gens), full_assoc_order);
}

std::vector<std::vector<Elem>> all_perms(std::size_t k, bool even_only) {
  std::vector<Elem> p(k);
  std::iota(p.begin(), p.end(), Elem{0});
  std::vector<std::vector<Elem>> out;
  do {
    if (even_only) {
      std::size_t inversions = 0;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) inversions += p[i] > p[j];
      }
      if (inversions % 2 != 0) continue;
    }
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

GroupPtr elaborate_builtin(const BuiltinSpec& b, const std::string& name, std::size_t assoc) {
  const std::size_t n = b.parameter;
  switch (b.kind) {
    case BuiltinSpec::Kind::cyclic: {
      require(n >= 1, "cyclic: order must be positive");
      std::vector<Elem> t(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i * n + j] = static_cast<Elem>((i + j) % n);
      }
      std::vector<Elem> gens;
      if (n > 1) gens.push_back(1);
      return make_group(name, n, std::move(t), std::move(gens), assoc);
    }
    case BuiltinSpec::Kind::dihedral: {
      require(n >= 1, "dihedral: parameter must be positive");
      const std::size_t m = n, N = 2 * n;
      std::vector<Elem> t(N * N);
      for (std::size_t x = 0; x < N; ++x) {
        const std::size_t i = x % m, j = x / m;
        for (std::size_t y = 0; y < N; ++y) {
          const std::size_t k = y % m, l = y / m;
          const std::size_t r = j == 0 ? (i + k) % m : (i + m - k) % m;
          t[x * N + y] = static_cast<Elem>(((j + l) % 2) * m + r);
        }
      }
      std::vector<Elem> gens;
      if (m > 1) gens.push_back(1);
      gens.push_back(static_cast<Elem>(m));
      return make_group(name, N, std::move(t), std::move(gens), assoc);
    }
    case BuiltinSpec::Kind::symmetric:
    case BuiltinSpec::Kind::alternating: {
      require(n >= 1 && n <= 8, kind_name(b.kind) + ": degree must be between 1 and 8");
      const bool alt = b.kind == BuiltinSpec::Kind::alternating;
      auto perms = all_perms(n, alt);
      return perm_table_group(name, std::move(perms), {}, assoc);
    }
  }
  throw InputError("unknown builtin");
}

GroupPtr elaborate_product(const GroupPtr& L, const GroupPtr& R, const std::string& name, std::size_t assoc) {
  const std::size_t a = L->order(), b = R->order(), N = a * b;
  std::vector<Elem> t(N * N);
  for (std::size_t x = 0; x < N; ++x) {
    for (std::size_t y = 0; y < N; ++y) {
      const Elem l = L->mul(static_cast<Elem>(x / b), static_cast<Elem>(y / b));
      const Elem r = R->mul(static_cast<Elem>(x % b), static_cast<Elem>(y % b));
      t[x * N + y] = static_cast<Elem>(l * b + r);
    }
  }
  std::vector<Elem> gens;
  for (Elem g : L->generators()) gens.push_back(static_cast<Elem>(g * b));
  for (Elem g : R->generators()) gens.push_back(g);
  return make_group(name, N, std::move(t), std::move(gens), assoc);
}

bool is_automorphism(const FiniteGroup& N, const std::vector<Elem>& img) {
  if (img.size() != N.order()) return false;
  std::vector<char> hit(N.order(), 0);
  for (Elem v : img) {
    if (v >= N.order() || hit[v]) return false;
    hit[v] = 1;
  }
  for (Elem x = 0; x < N.order(); ++x) {
    for (Elem y = 0; y < N.order(); ++y) {
      if (img[N.mul(x, y)] != N.mul(img[x], img[y])) return false;
    }
  }
  return true;
}

GroupPtr elaborate_semidirect(const GroupPtr& N, const GroupPtr& A, const SemidirectSpec& s, const std::string& name,
                              std::size_t assoc) {
  const std::size_t n = N->order(), a = A->order();
  const auto agens = A->generators();
  require(s.action.size() == agens.size(), name + ": action needs one image array per generator of " + A->name() +
                                               " (" + std::to_string(agens.size()) + ")");
  for (std::size_t i = 0; i < s.action.size(); ++i) {
    require(is_automorphism(*N, s.action[i]),
            name + ": action entry " + std::to_string(i) + " is not an automorphism of " + N->name());
  }
  // phi[x] for every x in A, by walking words in the generators.
  std::vector<std::vector<Elem>> phi(a);
  std::vector<Elem> id(n);
  std::iota(id.begin(), id.end(), Elem{0});
  phi[kIdentity] = id;
  std::vector<Elem> queue{kIdentity};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Elem x = queue[q];
    for (std::size_t i = 0; i < agens.size(); ++i) {
      const Elem y = A->mul(x, agens[i]);
      if (!phi[y].empty()) continue;
      std::vector<Elem> img(n);
      for (Elem v = 0; v < n; ++v) img[v] = phi[x][s.action[i][v]];
      phi[y] = std::move(img);
      queue.push_back(y);
    }
  }
  for (Elem x = 0; x < a; ++x) {
    for (std::size_t i = 0; i < agens.size(); ++i) {
      const Elem y = A->mul(x, agens[i]);
      for (Elem v = 0; v < n; ++v) {
        require(phi[y][v] == phi[x][s.action[i][v]], name + ": action does not define a homomorphism");
      }
    }
  }
  const std::size_t M = n * a;
  std::vector<Elem> t(M * M);
  for (std::size_t x = 0; x < M; ++x) {
    const Elem n1 = static_cast<Elem>(x / a), a1 = static_cast<Elem>(x % a);
    for (std::size_t y = 0; y < M; ++y) {
      const Elem n2 = static_cast<Elem>(y / a), a2 = static_cast<Elem>(y % a);
      t[x * M + y] = static_cast<Elem>(N->mul(n1, phi[a1][n2]) * a + A->mul(a1, a2));
    }
  }
  std::vector<Elem> gens;
  for (Elem g : N->generators()) gens.push_back(static_cast<Elem>(g * a));
  for (Elem g : agens) gens.push_back(g);
  return make_group(name, M, std::move(t), std::move(gens), assoc);
}

GroupPtr elaborate_permgroup(const PermGroupSpec& p, const std::string& name, std::size_t assoc) {
  const std::size_t d = p.degree;
  require(d >= 1, name + ": degree must be positive");
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    const auto& g = p.generators[i];
    std::vector<char> hit(d, 0);
    bool ok = g.size() == d;
    for (Elem v : g) {
      ok = ok && v < d && !hit[v];
      if (ok) hit[v] = 1;
    }
    require(ok, name + ": generator " + std::to_string(i + 1) + " is not a permutation of degree " + std::to_string(d));
  }
  std::vector<Elem> id(d);
  std::iota(id.begin(), id.end(), Elem{0});
  std::map<std::vector<Elem>, int> seen{{id, 0}};
  std::vector<std::vector<Elem>> elems{id};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : p.generators) {
      std::vector<Elem> z(d);
      for (std::size_t x = 0; x < d; ++x) z[x] = elems[i][g[x]];
      if (seen.emplace(z, 0).second) {
        elems.push_back(std::move(z));
        require(elems.size() <= 1'000'000, name + ": permutation group is too large");
      }
    }
  }
  std::vector<std::vector<Elem>> sorted = elems;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Elem> gens;
  for (const auto& g : p.generators) {
    const auto idx = static_cast<Elem>(std::lower_bound(sorted.begin(), sorted.end(), g) - sorted.begin());
    if (idx != kIdentity && std::find(gens.begin(), gens.end(), idx) == gens.end()) gens.push_back(idx);
  }
  return perm_table_group(name, std::move(sorted), std::move(gens), assoc);
}

}  // namespace

SpecPtr cyclic(std::size_t n) { return wrap(BuiltinSpec{BuiltinSpec::Kind::cyclic, n}); }
SpecPtr dihedral(std::size_t m) { return wrap(BuiltinSpec{BuiltinSpec::Kind::dihedral, m}); }
SpecPtr symmetric(std::size_t k) { return wrap(BuiltinSpec{BuiltinSpec::Kind::symmetric, k}); }
SpecPtr alternating(std::size_t k) { return wrap(BuiltinSpec{BuiltinSpec::Kind::alternating, k}); }
SpecPtr product(SpecPtr left, SpecPtr right) { return wrap(ProductSpec{std::move(left), std::move(right)}); }
SpecPtr semidirect(SpecPtr normal, SpecPtr acting, std::vector<std::vector<Elem>> action) {
  return wrap(SemidirectSpec{std::move(normal), std::move(acting), std::move(action)});
}
SpecPtr table_spec(std::size_t order, std::vector<Elem> table) { return wrap(TableSpec{order, std::move(table)}); }
SpecPtr permgroup(std::size_t degree, std::vector<std::vector<Elem>> generators) {
  return wrap(PermGroupSpec{degree, std::move(generators)});
}
SpecPtr named(SpecPtr spec, std::string name) {
  GroupSpec copy = *spec;
  copy.name = std::move(name);
  return std::make_shared<const GroupSpec>(std::move(copy));
}

std::string default_name(const GroupSpec& spec) {
  if (!spec.name.empty()) return spec.name;
  return std::visit(
      [](const auto& b) -> std::string {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, BuiltinSpec>) {
          static const char* prefix[] = {"C", "D", "S", "A"};
          return prefix[static_cast<int>(b.kind)] + std::to_string(b.parameter);
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          return default_name(*b.left) + "x" + default_name(*b.right);
        } else if constexpr (std::is_same_v<T, SemidirectSpec>) {
          return default_name(*b.normal) + ":" + default_name(*b.acting);
        } else if constexpr (std::is_same_v<T, TableSpec>) {
          return "table" + std::to_string(b.order);
        } else {
          return "perm" + std::to_string(b.degree);
        }
      },
      spec.body);
}

GroupPtr elaborate(const GroupSpec& spec, std::size_t assoc) {
  const std::string name = default_name(spec);
  return std::visit(
      [&](const auto& b) -> GroupPtr {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, BuiltinSpec>) {
          return elaborate_builtin(b, name, assoc);
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          return elaborate_product(elaborate(*b.left, assoc), elaborate(*b.right, assoc), name, assoc);
        } else if constexpr (std::is_same_v<T, SemidirectSpec>) {
          return elaborate_semidirect(elaborate(*b.normal, assoc), elaborate(*b.acting, assoc), b, name, assoc);
        } else if constexpr (std::is_same_v<T, TableSpec>) {
          require(b.table.size() == b.order * b.order, name + ": table needs order^2 entries");
          return make_group(name, b.order, b.table, std::vector<Elem>{}, assoc);
        } else {
          return elaborate_permgroup(b, name, assoc);
        }
      },
      spec.body);
}

namespace {

std::size_t get_size(const json& j, const char* key, const std::string& where) {
  require(j.contains(key) && j[key].is_number_unsigned(), where + ": missing or invalid field '" + key + "'");
  return j[key].get<std::size_t>();
}

std::vector<Elem> get_elems(const json& j, const std::string& where) {
  require(j.is_array(), where + ": expected an array of indices");
  std::vector<Elem> out;
  for (const auto& v : j) {
    require(v.is_number_unsigned(), where + ": expected a non-negative integer");
    out.push_back(v.get<Elem>());
  }
  return out;
}

std::vector<Elem> power_map(const FiniteGroup& N, std::uint64_t k) {
  std::vector<Elem> img(N.order());
  for (Elem x = 0; x < N.order(); ++x) img[x] = N.power(x, k);
  return img;
}

}  // namespace

SpecPtr spec_from_json(const json& j) {
  require(j.is_object(), "group spec must be a JSON object");
  require(j.contains("kind") && j["kind"].is_string(), "group spec: missing 'kind'");
  const std::string kind = j["kind"];
  SpecPtr out;
  if (kind == "cyclic") {
    out = cyclic(get_size(j, "n", kind));
  } else if (kind == "dihedral") {
    out = dihedral(get_size(j, "n", kind));
  } else if (kind == "symmetric") {
    out = symmetric(get_size(j, "n", kind));
  } else if (kind == "alternating") {
    out = alternating(get_size(j, "n", kind));
  } else if (kind == "product") {
    require(j.contains("left") && j.contains("right"), "product: needs 'left' and 'right'");
    out = product(spec_from_json(j["left"]), spec_from_json(j["right"]));
  } else if (kind == "semidirect") {
    require(j.contains("normal") && j.contains("acting") && j.contains("action") && j["action"].is_array(),
            "semidirect: needs 'normal', 'acting' and 'action'");
    auto normal = spec_from_json(j["normal"]);
    auto acting = spec_from_json(j["acting"]);
    std::vector<std::vector<Elem>> action;
    GroupPtr N;
    for (const auto& a : j["action"]) {
      if (a.is_object()) {
        require(a.contains("power") && a["power"].is_number_unsigned(), "semidirect: action object needs 'power'");
        if (!N) N = elaborate(*normal);
        action.push_back(power_map(*N, a["power"].get<std::uint64_t>()));
      } else {
        action.push_back(get_elems(a, "semidirect action"));
      }
    }
    out = semidirect(std::move(normal), std::move(acting), std::move(action));
  } else if (kind == "table") {
    const std::size_t n = get_size(j, "order", kind);
    require(j.contains("table") && j["table"].is_array() && j["table"].size() == n, "table: needs 'order' rows");
    std::vector<Elem> t;
    for (const auto& row : j["table"]) {
      auto r = get_elems(row, "table row");
      require(r.size() == n, "table: every row needs 'order' entries");
      t.insert(t.end(), r.begin(), r.end());
    }
    out = table_spec(n, std::move(t));
  } else if (kind == "permgroup") {
    const std::size_t d = get_size(j, "degree", kind);
    require(j.contains("generators") && j["generators"].is_array(), "permgroup: needs 'generators'");
    std::vector<std::vector<Elem>> gens;
    for (const auto& g : j["generators"]) gens.push_back(get_elems(g, "permgroup generator"));
    out = permgroup(d, std::move(gens));
  } else {
    throw InputError("group spec: unknown kind '" + kind + "'");
  }
  if (j.contains("name")) {
    require(j["name"].is_string(), "group spec: 'name' must be a string");
    out = named(out, j["name"]);
  }
  return out;
}

json spec_to_json(const GroupSpec& spec) {
  json j = std::visit(
      [](const auto& b) -> json {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, BuiltinSpec>) {
          return {{"kind", kind_name(b.kind)}, {"n", b.parameter}};
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          return {{"kind", "product"}, {"left", spec_to_json(*b.left)}, {"right", spec_to_json(*b.right)}};
        } else if constexpr (std::is_same_v<T, SemidirectSpec>) {
          return {{"kind", "semidirect"},
                  {"normal", spec_to_json(*b.normal)},
                  {"acting", spec_to_json(*b.acting)},
                  {"action", b.action}};
        } else if constexpr (std::is_same_v<T, TableSpec>) {
          json rows = json::array();
          for (std::size_t i = 0; i < b.order; ++i) {
            rows.push_back(std::vector<Elem>(b.table.begin() + i * b.order, b.table.begin() + (i + 1) * b.order));
          }
          return {{"kind", "table"}, {"order", b.order}, {"table", rows}};
        } else {
          return {{"kind", "permgroup"}, {"degree", b.degree}, {"generators", b.generators}};
        }
      },
      spec.body);
  if (!spec.name.empty()) j["name"] = spec.name;
  return j;
}

namespace {

std::string trim(std::string s) {
  auto issp = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && issp(s.back())) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && issp(s[i])) ++i;
  return s.substr(i);
}

SpecPtr parse_factor(const std::string& raw) {
  const std::string t = trim(raw);
  require(!t.empty(), "group expression: empty factor");
  auto number = [&](const std::string& digits) -> std::size_t {
    require(!digits.empty() && std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }),
            "group expression: bad parameter in '" + t + "'");
    return std::stoul(digits);
  };
  const auto open = t.find('(');
  if (open != std::string::npos) {
    require(t.back() == ')', "group expression: missing ')' in '" + t + "'");
    const std::string fn = trim(t.substr(0, open));
    const std::size_t n = number(trim(t.substr(open + 1, t.size() - open - 2)));
    if (fn == "cyclic") return cyclic(n);
    if (fn == "dihedral") return dihedral(n);
    if (fn == "symmetric") return symmetric(n);
    if (fn == "alternating") return alternating(n);
    throw InputError("group expression: unknown builtin '" + fn + "'");
  }
  const std::size_t n = number(t.substr(1));
  switch (t[0]) {
    case 'C': return cyclic(n);
    case 'D': return dihedral(n);
    case 'S': return symmetric(n);
    case 'A': return alternating(n);
    default: throw InputError("group expression: cannot parse '" + t + "'");
  }
}

}  // namespace

SpecPtr parse_group_expression(const std::string& text) {
  std::vector<SpecPtr> factors;
  std::size_t start = 0;
  while (true) {
    const auto star = text.find('*', start);
    factors.push_back(parse_factor(text.substr(start, star == std::string::npos ? std::string::npos : star - start)));
    if (star == std::string::npos) break;
    start = star + 1;
  }
  SpecPtr out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = product(out, factors[i]);
  return out;
}

GroupFile parse_group_text(const std::string& text, const std::string& origin, std::size_t assoc) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::optional<json> header;
  std::vector<std::pair<std::size_t, std::vector<Elem>>> rows;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const std::string where = origin + ":" + std::to_string(lineno);
    if (!header) {
      try {
        header = json::parse(t);
      } catch (const json::parse_error& e) {
        throw InputError(where + ": header is not valid JSON: " + e.what());
      }
      require(header->is_object(), where + ": header must be a JSON object");
      continue;
    }
    std::istringstream row(t);
    std::vector<Elem> values;
    std::string tok;
    std::size_t field = 0;
    while (row >> tok) {
      ++field;
      require(std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }),
              where + ": field " + std::to_string(field) + ": '" + tok + "' is not a non-negative integer");
      values.push_back(static_cast<Elem>(std::stoul(tok)));
    }
    rows.emplace_back(lineno, std::move(values));
  }
  require(header.has_value(), origin + ": missing header line");
  GroupFile out;
  out.header = *header;
  require(out.header.contains("kind") && out.header["kind"].is_string(), origin + ": header needs a 'kind'");
  const std::string kind = out.header["kind"];
  json spec_json = out.header;
  if (kind == "table") {
    const std::size_t n = get_size(out.header, "order", origin);
    require(rows.size() == n, origin + ": expected " + std::to_string(n) + " table rows, found " + std::to_string(rows.size()));
    std::vector<Elem> table;
    for (const auto& [ln, r] : rows) {
      require(r.size() == n, origin + ":" + std::to_string(ln) + ": expected " + std::to_string(n) + " entries, found " +
                                 std::to_string(r.size()));
      for (std::size_t k = 0; k < n; ++k) {
        require(r[k] < n, origin + ":" + std::to_string(ln) + ": field " + std::to_string(k + 1) + ": index " +
                              std::to_string(r[k]) + " out of range");
      }
      table.insert(table.end(), r.begin(), r.end());
    }
    // Move the identity to index 0 by swapping labels e and 0.
    std::optional<Elem> e;
    for (Elem x = 0; x < n && !e; ++x) {
      bool ok = true;
      for (Elem y = 0; y < n && ok; ++y) ok = table[x * n + y] == y && table[y * n + x] == y;
      if (ok) e = x;
    }
    require(n > 0 && e.has_value(), origin + ": table has no identity element");
    if (*e != kIdentity) {
      auto swap_label = [&](Elem v) { return v == *e ? kIdentity : (v == kIdentity ? *e : v); };
      std::vector<Elem> moved(n * n);
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) moved[swap_label(x) * n + swap_label(y)] = swap_label(table[x * n + y]);
      }
      table = std::move(moved);
      out.header["reindexed"] = {{"identity_was", *e}};
    }
    json rows_json = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      rows_json.push_back(std::vector<Elem>(table.begin() + i * n, table.begin() + (i + 1) * n));
    }
    spec_json["table"] = rows_json;
  } else if (kind == "permgroup") {
    json gens = json::array();
    for (const auto& [ln, r] : rows) gens.push_back(r);
    spec_json["generators"] = gens;
  } else {
    require(rows.empty(), origin + ": kind '" + kind + "' takes no data rows");
  }
  spec_json.erase("order");
  if (kind == "table") spec_json["order"] = out.header["order"];
  for (const char* meta : {"tier", "description", "reindexed"}) spec_json.erase(meta);
  try {
    out.spec = spec_from_json(spec_json);
    out.group = elaborate(*out.spec, assoc);
  } catch (const InputError& err) {
    throw InputError(origin + ": " + err.what());
  }
  if (out.header.contains("order")) {
    require(out.header["order"].is_number_unsigned() && out.header["order"].get<std::size_t>() == out.group->order(),
            origin + ": header order " + out.header["order"].dump() + " does not match the group order " +
                std::to_string(out.group->order()));
  }
  return out;
}

GroupFile parse_group_file(const std::filesystem::path& path, std::size_t assoc) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open group file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_text(buf.str(), path.string(), assoc);
}

std::string group_file_text(const FiniteGroup& G) {
  json header = {{"name", G.name()}, {"order", G.order()}, {"kind", "table"}};
  std::string out = header.dump() + "\n";
  const std::size_t n = G.order();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out += ' ';
      out += std::to_string(G.table()[i * n + j]);
    }
    out += '\n';
  }
  return out;
}

void write_group_file(const FiniteGroup& G, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write group file " + path.string());
  out << group_file_text(G);
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) throw InputError("catalog directory not found: " + dir.string());
  std::vector<CatalogEntry> out;
  for (const auto& file : std::filesystem::directory_iterator(dir)) {
    if (file.path().extension() != ".grp") continue;
    std::ifstream in(file.path());
    std::string line;
    while (std::getline(in, line)) {
      const std::string t = trim(line);
      if (!t.empty() && t[0] != '#') break;
    }
    json h;
    try {
      h = json::parse(trim(line));
    } catch (const json::parse_error& e) {
      throw InputError(file.path().string() + ": header is not valid JSON: " + e.what());
    }
    require(h.is_object() && h.contains("name") && h["name"].is_string(), file.path().string() + ": header needs a 'name'");
    CatalogEntry e;
    e.name = h["name"];
    e.tier = h.value("tier", std::string("default"));
    e.description = h.value("description", std::string());
    e.order = h.value("order", std::size_t{0});
    e.path = file.path();
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) { return a.name < b.name; });
  for (std::size_t i = 1; i < out.size(); ++i) {
    require(out[i].name != out[i - 1].name, "catalog: duplicate entry " + out[i].name);
  }
  return out;
}

GroupFile load_entry(const CatalogEntry& entry, std::size_t assoc) { return parse_group_file(entry.path, assoc); }

}  // namespace mhol
