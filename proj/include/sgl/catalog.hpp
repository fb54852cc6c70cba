#pragma once

#include <functional>

#include "sgl/group.hpp"

namespace sgl {

namespace detail {

inline Group table_group(std::uint64_t n,
                         const std::function<ElementId(ElementId, ElementId)>& mul,
                         const std::function<std::string(ElementId)>& label,
                         const Limits& lim) {
  std::vector<std::uint32_t> table(n * n);
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = 0; y < n; ++y)
      table[x * n + y] = static_cast<std::uint32_t>(mul(x, y));
  std::vector<std::string> labels(n);
  for (std::uint64_t x = 0; x < n; ++x) labels[x] = label(x);
  auto impl =
      std::make_shared<CayleyGroup>(n, std::move(table), std::move(labels));
  tag_prime(impl.get());
  (void)lim;
  return Group(impl);
}

}  // namespace detail

// Cyclic automorphism action: the top group must be cyclic; its generator
// acts by `perm`, so t^k acts by perm^k.
inline Action cyclic_action(const Group& base, const Group& top,
                            const std::vector<ElementId>& perm) {
  auto gens = top.generators();
  if (gens.size() > 1)
    throw invalid_action_error("named actions need a cyclic top group");
  Action act;
  act.top = top;
  act.base = base;
  act.auto_table.assign(top.order(), {});
  std::vector<ElementId> id(base.order());
  for (std::uint64_t i = 0; i < base.order(); ++i) id[i] = i;
  if (gens.empty()) {
    act.auto_table[0] = id;
    return act;
  }
  const ElementId t = gens[0];
  std::vector<ElementId> cur = id;
  ElementId h = 0;
  do {
    act.auto_table[h] = cur;
    std::vector<ElementId> next(base.order());
    for (std::uint64_t i = 0; i < base.order(); ++i) next[i] = perm[cur[i]];
    cur = std::move(next);
    h = top.mul(h, t);
  } while (h != 0);
  return act;
}

inline Action inversion_action(const Group& base, const Group& top) {
  if (!base.is_abelian())
    throw invalid_action_error("inversion acts on abelian groups only");
  std::vector<ElementId> perm(base.order());
  for (std::uint64_t i = 0; i < base.order(); ++i) perm[i] = base.inverse(i);
  return cyclic_action(base, top, perm);
}

// Power automorphism x -> x^k on an abelian base.
inline Action power_action(const Group& base, const Group& top,
                           std::uint64_t k) {
  std::vector<ElementId> perm(base.order());
  for (std::uint64_t i = 0; i < base.order(); ++i) perm[i] = base.power(i, k);
  return cyclic_action(base, top, perm);
}

// Dihedral group of order n (n even >= 4), as C_{n/2} ⋊ C2 with inversion.
inline Group dihedral(std::uint64_t n, const Limits& lim = {}) {
  if (n < 4 || n % 2 != 0)
    throw invalid_order_error("dihedral order must be even and >= 4");
  Group rot = cyclic(n / 2, lim);
  Group flip = cyclic(2, lim);
  return semidirect_product(rot, flip, inversion_action(rot, flip), lim);
}

// Generalized quaternion group of order 2^k (k >= 3): elements a^i b^j with
// a of order 2^{k-1}, b^2 = a^{m/2}, b a b^{-1} = a^{-1}.
inline Group quaternion(std::uint64_t n, const Limits& lim = {}) {
  if (n < 8 || (n & (n - 1)) != 0)
    throw invalid_order_error("generalized quaternion order must be 2^k >= 8");
  const std::uint64_t m = n / 2;  // order of a
  auto mul = [m](ElementId x, ElementId y) -> ElementId {
    std::uint64_t i1 = x / 2, j1 = x % 2, i2 = y / 2, j2 = y % 2;
    // a^i1 b^j1 a^i2 b^j2; move b past a: b a^i = a^{-i} b
    std::uint64_t i = j1 ? (i1 + m - i2) % m : (i1 + i2) % m;
    std::uint64_t j = j1 + j2;
    if (j == 2) return ((i + m / 2) % m) * 2;  // b^2 = a^{m/2}
    return i * 2 + j;
  };
  auto label = [m](ElementId x) {
    std::uint64_t i = x / 2, j = x % 2;
    std::string s = "a^" + std::to_string(i);
    if (j) s += " b";
    return s;
  };
  return detail::table_group(n, mul, label, lim);
}

// Semidihedral group of order 2^k (k >= 4): C_{2^{k-1}} ⋊ C2, g -> g^{m/2-1}.
inline Group semidihedral(std::uint64_t n, const Limits& lim = {}) {
  if (n < 16 || (n & (n - 1)) != 0)
    throw invalid_order_error("semidihedral order must be 2^k >= 16");
  Group base = cyclic(n / 2, lim);
  Group top = cyclic(2, lim);
  return semidirect_product(base, top,
                            power_action(base, top, n / 4 - 1), lim);
}

// Modular maximal-cyclic group of order 2^k (k >= 4): g -> g^{m/2+1}.
inline Group modular_group(std::uint64_t n, const Limits& lim = {}) {
  if (n < 16 || (n & (n - 1)) != 0)
    throw invalid_order_error("modular group order must be 2^k >= 16");
  Group base = cyclic(n / 2, lim);
  Group top = cyclic(2, lim);
  return semidirect_product(base, top,
                            power_action(base, top, n / 4 + 1), lim);
}

// Heisenberg group of order p^3: triples (a,b,c) with
// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
inline Group heisenberg(std::uint64_t p, const Limits& lim = {}) {
  if (p < 2 || !detail::prime_power_base(p) || *detail::prime_power_base(p) != p)
    throw invalid_order_error("heisenberg parameter must be prime");
  const std::uint64_t n = p * p * p;
  auto mul = [p](ElementId x, ElementId y) -> ElementId {
    std::uint64_t a1 = x / (p * p), b1 = (x / p) % p, c1 = x % p;
    std::uint64_t a2 = y / (p * p), b2 = (y / p) % p, c2 = y % p;
    return ((a1 + a2) % p) * p * p + ((b1 + b2) % p) * p +
           (c1 + c2 + a1 * b2) % p;
  };
  auto label = [p](ElementId x) {
    return "(" + std::to_string(x / (p * p)) + "," +
           std::to_string((x / p) % p) + "," + std::to_string(x % p) + ")";
  };
  return detail::table_group(n, mul, label, lim);
}

// Resolves a catalog name: Q8/Q16/Q32, D8/D16/..., SD16/SD32, M16/M32,
// Heis3/Heis5, Klein.
inline Group named_group(const std::string& name, const Limits& lim = {}) {
  auto suffix_int = [&](std::size_t at) -> std::optional<std::uint64_t> {
    if (at >= name.size()) return std::nullopt;
    std::uint64_t v = 0;
    for (std::size_t i = at; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9') return std::nullopt;
      v = v * 10 + (name[i] - '0');
    }
    return v;
  };
  try {
    if (name == "Klein") return abelian({2, 2}, lim);
    if (name.rfind("Heis", 0) == 0)
      if (auto p = suffix_int(4)) return heisenberg(*p, lim);
    if (name.rfind("SD", 0) == 0)
      if (auto n = suffix_int(2)) return semidihedral(*n, lim);
    if (name.size() > 1 && name[0] == 'Q')
      if (auto n = suffix_int(1)) return quaternion(*n, lim);
    if (name.size() > 1 && name[0] == 'D')
      if (auto n = suffix_int(1)) return dihedral(*n, lim);
    if (name.size() > 1 && name[0] == 'M')
      if (auto n = suffix_int(1)) return modular_group(*n, lim);
  } catch (const invalid_order_error& e) {
    throw domain_error("bad catalog name '" + name + "': " + e.what());
  }
  throw domain_error("unknown catalog name '" + name + "'");
}

}  // namespace sgl
