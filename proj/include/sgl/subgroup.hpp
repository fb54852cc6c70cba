#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>
#include <vector>

#include "sgl/group.hpp"

namespace sgl {

// Subset of a parent group closed under its operations. `members` is sorted;
// `generators` is a witness set generating `members`.
struct Subgroup {
  Group parent;
  std::vector<ElementId> members;
  std::vector<ElementId> generators;

  std::uint64_t order() const { return members.size(); }
  bool contains(ElementId x) const {
    return std::binary_search(members.begin(), members.end(), x);
  }
  bool is_trivial() const { return members.size() == 1; }
  bool is_whole() const { return members.size() == parent.order(); }
  bool subset_of(const Subgroup& other) const {
    return std::includes(other.members.begin(), other.members.end(),
                         members.begin(), members.end());
  }
  bool same_members(const Subgroup& other) const {
    return members == other.members;
  }
  bool is_abelian() const {
    for (std::size_t i = 0; i < generators.size(); ++i)
      for (std::size_t j = i + 1; j < generators.size(); ++j)
        if (parent.mul(generators[i], generators[j]) !=
            parent.mul(generators[j], generators[i]))
          return false;
    return true;
  }
};

namespace detail {

// BFS closure of a generating set; right multiplication suffices in a finite
// group. Uses a hash set so it also works on large structural parents.
inline std::vector<ElementId> closure(const Group& g,
                                      const std::vector<ElementId>& gens) {
  std::unordered_set<ElementId> seen{0};
  std::vector<ElementId> members{0};
  std::vector<ElementId> work{0};
  while (!work.empty()) {
    ElementId x = work.back();
    work.pop_back();
    for (ElementId s : gens) {
      ElementId y = g.mul(x, s);
      if (seen.insert(y).second) {
        members.push_back(y);
        work.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

// Greedy pass keeping only generators that enlarge the generated subgroup.
inline std::vector<ElementId> trim_generators(const Group& g,
                                              std::vector<ElementId> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<ElementId> kept;
  std::unordered_set<ElementId> span{0};
  for (ElementId x : gens) {
    if (span.count(x)) continue;
    kept.push_back(x);
    span.clear();
    for (ElementId y : closure(g, kept)) span.insert(y);
  }
  return kept;
}

}  // namespace detail

// Smallest subgroup of G containing S.
inline Subgroup generated_subgroup(const Group& g,
                                   std::vector<ElementId> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::erase(gens, ElementId{0});
  return Subgroup{g, detail::closure(g, gens), std::move(gens)};
}

inline Subgroup trivial_subgroup(const Group& g) {
  return Subgroup{g, {0}, {}};
}

inline Subgroup whole_subgroup(const Group& g) {
  std::vector<ElementId> members(g.order());
  for (std::uint64_t i = 0; i < g.order(); ++i) members[i] = i;
  return Subgroup{g, std::move(members), g.generators()};
}

// Subgroup from a known-closed member set; recomputes a small generator set.
inline Subgroup subgroup_from_members(const Group& g,
                                      std::vector<ElementId> members) {
  std::sort(members.begin(), members.end());
  std::vector<ElementId> gens;
  std::unordered_set<ElementId> have{0};
  for (ElementId x : members) {
    if (have.count(x)) continue;
    gens.push_back(x);
    for (ElementId y : detail::closure(g, gens)) have.insert(y);
  }
  return Subgroup{g, std::move(members), std::move(gens)};
}

// Every subgroup of G exactly once, sorted by (order, lexicographic member
// set). Layered closure: cyclic subgroups first, then extend each known
// subgroup by one outside element and close, dedup by member set.
inline std::vector<Subgroup> all_subgroups(const Group& g,
                                           const Limits& lim = {}) {
  const std::uint64_t n = g.order();
  if (n > lim.enum_bound)
    throw capacity_error("subgroup enumeration bound exceeded (order " +
                             std::to_string(n) + ")",
                         n);
  std::map<std::vector<ElementId>, std::vector<ElementId>> found;  // members -> gens
  found.emplace(std::vector<ElementId>{0}, std::vector<ElementId>{});
  std::vector<std::pair<std::vector<ElementId>, std::vector<ElementId>>> work;
  for (ElementId x = 1; x < n; ++x) {
    std::vector<ElementId> gens{x};
    auto members = detail::closure(g, gens);
    if (found.emplace(members, gens).second) work.emplace_back(members, gens);
  }
  while (!work.empty()) {
    auto [members, gens] = std::move(work.back());
    work.pop_back();
    for (ElementId x = 1; x < n; ++x) {
      if (std::binary_search(members.begin(), members.end(), x)) continue;
      std::vector<ElementId> egens = gens;
      egens.push_back(x);
      auto emembers = detail::closure(g, egens);
      if (found.emplace(emembers, egens).second)
        work.emplace_back(emembers, egens);
    }
  }
  std::vector<Subgroup> result;
  result.reserve(found.size());
  for (auto& [members, gens] : found)
    result.push_back(Subgroup{g, members, gens});
  std::stable_sort(result.begin(), result.end(),
                   [](const Subgroup& a, const Subgroup& b) {
                     if (a.order() != b.order()) return a.order() < b.order();
                     return a.members < b.members;
                   });
  return result;
}

namespace detail {

inline bool normal_under(const Subgroup& h,
                         const std::vector<ElementId>& ambient_gens) {
  const Group& g = h.parent;
  for (ElementId a : ambient_gens)
    for (ElementId x : h.members)
      if (!h.contains(g.conj(a, x))) return false;
  return true;
}

}  // namespace detail

// gHg^{-1} = H for all g in G, checked on generators of G against all
// members of H.
inline bool is_normal(const Group& g, const Subgroup& h) {
  if (h.parent.impl() != g.impl())
    throw domain_error("subgroup does not belong to this group");
  return detail::normal_under(h, g.generators());
}

inline bool is_normal_in(const Subgroup& ambient, const Subgroup& h) {
  return detail::normal_under(h, ambient.generators);
}

// [A,H]: generated by the commutators h a h^{-1} a^{-1}. Requires H to
// normalize A.
inline Subgroup relative_commutator(const Subgroup& a, const Subgroup& h) {
  if (a.parent.impl() != h.parent.impl())
    throw domain_error("relative commutator needs a common parent");
  const Group& g = a.parent;
  for (ElementId x : h.generators)
    for (ElementId y : a.members)
      if (!a.contains(g.conj(x, y)))
        throw not_normal_error("H does not normalize A");
  std::vector<ElementId> gens;
  for (ElementId x : h.members)
    for (ElementId y : a.members) {
      ElementId c = g.mul(g.conj(x, y), g.inverse(y));
      if (c != 0) gens.push_back(c);
    }
  auto sub = generated_subgroup(g, std::move(gens));
  sub.generators = detail::trim_generators(g, sub.generators);
  return sub;
}

// A^p: generated by the p-th powers of the members of A.
inline Subgroup agemo(const Subgroup& a, std::uint64_t p) {
  std::vector<ElementId> gens;
  for (ElementId x : a.members) {
    ElementId y = a.parent.power(x, p);
    if (y != 0) gens.push_back(y);
  }
  auto sub = generated_subgroup(a.parent, std::move(gens));
  sub.generators = detail::trim_generators(a.parent, sub.generators);
  return sub;
}

// {ah : a in A, h in H}; a subgroup when A is normal.
inline std::vector<ElementId> product_set(const Subgroup& a,
                                          const Subgroup& h) {
  if (a.parent.impl() != h.parent.impl())
    throw domain_error("product set needs a common parent");
  std::unordered_set<ElementId> seen;
  for (ElementId x : a.members)
    for (ElementId y : h.members) seen.insert(a.parent.mul(x, y));
  std::vector<ElementId> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<ElementId> intersect_members(const Subgroup& a,
                                                const Subgroup& b) {
  std::vector<ElementId> out;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(),
                        b.members.end(), std::back_inserter(out));
  return out;
}

// |AH| = |A||H|/|A ∩ H| without materializing the product.
inline std::uint64_t product_size(const Subgroup& a, const Subgroup& h) {
  return a.order() * h.order() / intersect_members(a, h).size();
}

}  // namespace sgl
