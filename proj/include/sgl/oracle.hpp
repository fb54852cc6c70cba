#pragma once

#include <map>
#include <set>

#include "sgl/group.hpp"

// Brute-force reference implementations used to validate the engine. By
// design these share nothing with the rest of the library beyond the Group
// element interface: subgroup closure and enumeration are reimplemented here
// in the most literal way available.

namespace sgl::oracle {

struct Fingerprint {
  std::uint64_t order = 0;
  std::map<std::uint64_t, std::uint64_t> element_order_histogram;
  bool abelian = false;
  std::uint64_t center_order = 0;
  std::uint64_t derived_order = 0;  // |[G,G]|

  bool operator==(const Fingerprint&) const = default;
};

namespace detail {

// Closure by repeated full product passes until stable.
inline std::set<ElementId> naive_close(const Group& g, std::set<ElementId> s) {
  s.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<ElementId> cur(s.begin(), s.end());
    for (ElementId x : cur) {
      if (s.insert(g.inverse(x)).second) grew = true;
      for (ElementId y : cur)
        if (s.insert(g.mul(x, y)).second) grew = true;
    }
  }
  return s;
}

// Every subgroup of G whose members lie inside `universe`.
inline std::vector<std::set<ElementId>> naive_subgroups(
    const Group& g, const std::set<ElementId>& universe) {
  std::set<std::set<ElementId>> found;
  found.insert({0});
  std::vector<std::set<ElementId>> work{{0}};
  while (!work.empty()) {
    std::set<ElementId> s = std::move(work.back());
    work.pop_back();
    for (ElementId x : universe) {
      if (s.count(x)) continue;
      std::set<ElementId> e = s;
      e.insert(x);
      e = naive_close(g, std::move(e));
      bool inside = true;
      for (ElementId y : e)
        if (!universe.count(y)) {
          inside = false;
          break;
        }
      if (inside && found.insert(e).second) work.push_back(e);
    }
  }
  return {found.begin(), found.end()};
}

inline bool naive_abelian(const Group& g, const std::set<ElementId>& s) {
  for (ElementId x : s)
    for (ElementId y : s)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

inline bool naive_normal_in(const Group& g, const std::set<ElementId>& sub,
                            const std::set<ElementId>& ambient) {
  for (ElementId a : ambient)
    for (ElementId x : sub)
      if (!sub.count(g.mul(g.mul(a, x), g.inverse(a)))) return false;
  return true;
}

inline std::set<ElementId> naive_product(const Group& g,
                                         const std::set<ElementId>& a,
                                         const std::set<ElementId>& h) {
  std::set<ElementId> out;
  for (ElementId x : a)
    for (ElementId y : h) out.insert(g.mul(x, y));
  return out;
}

// Definition-based search, no memoization, every (A, H) pair enumerated.
inline bool naive_semiabelian(const Group& g, const std::set<ElementId>& s) {
  if (s.size() == 1 || naive_abelian(g, s)) return true;
  const auto subs = naive_subgroups(g, s);
  for (const auto& a : subs) {
    if (a.size() == 1) continue;
    if (!naive_abelian(g, a) || !naive_normal_in(g, a, s)) continue;
    for (const auto& h : subs) {
      if (h.size() >= s.size()) continue;
      if (naive_product(g, a, h) != s) continue;
      if (naive_semiabelian(g, h)) return true;
    }
  }
  return false;
}

}  // namespace detail

inline bool semiabelian_naive(const Group& g, const Limits& lim = {}) {
  if (g.order() > lim.oracle_bound)
    throw capacity_error("oracle bound exceeded", g.order());
  std::set<ElementId> all;
  for (ElementId x = 0; x < g.order(); ++x) all.insert(x);
  return detail::naive_semiabelian(g, all);
}

// Smallest k such that some k-subset generates G, by exhaustive subset
// search ascending in k.
inline std::uint64_t brute_rank(const Group& g, const Limits& lim = {}) {
  const std::uint64_t n = g.order();
  if (n > 64) throw capacity_error("brute rank bound exceeded", n);
  if (n == 1) return 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    std::vector<std::uint64_t> pick(k);
    for (std::uint64_t i = 0; i < k; ++i) pick[i] = i + 1;
    while (true) {
      std::set<ElementId> s(pick.begin(), pick.end());
      if (detail::naive_close(g, s).size() == n) return k;
      // next k-combination of {1, ..., n-1}
      std::uint64_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::uint64_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return n;  // unreachable: the full element set always generates
}

// Intersection of all maximal subgroups.
inline std::vector<ElementId> frattini_by_maximal(const Group& g,
                                                  const Limits& lim = {}) {
  if (g.order() > lim.enum_bound)
    throw capacity_error("oracle enumeration bound exceeded", g.order());
  std::set<ElementId> all;
  for (ElementId x = 0; x < g.order(); ++x) all.insert(x);
  auto subs = detail::naive_subgroups(g, all);
  std::vector<std::set<ElementId>> proper;
  for (auto& s : subs)
    if (s.size() < g.order()) proper.push_back(s);
  std::set<ElementId> result = all;
  for (const auto& s : proper) {
    bool maximal = true;
    for (const auto& t : proper)
      if (t.size() > s.size() &&
          std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    std::set<ElementId> keep;
    for (ElementId x : result)
      if (s.count(x)) keep.insert(x);
    result = std::move(keep);
  }
  return {result.begin(), result.end()};
}

inline Fingerprint fingerprint(const Group& g) {
  Fingerprint fp;
  fp.order = g.order();
  for (ElementId x = 0; x < g.order(); ++x) {
    std::uint64_t o = 1;
    ElementId y = x;
    while (y != 0) {
      y = g.mul(y, x);
      ++o;
    }
    ++fp.element_order_histogram[o];
  }
  fp.abelian = true;
  std::set<ElementId> commutators;
  std::uint64_t center = 0;
  for (ElementId x = 0; x < g.order(); ++x) {
    bool central = true;
    for (ElementId y = 0; y < g.order(); ++y) {
      ElementId xy = g.mul(x, y), yx = g.mul(y, x);
      if (xy != yx) {
        central = false;
        fp.abelian = false;
      }
      commutators.insert(g.mul(xy, g.inverse(yx)));
    }
    if (central) ++center;
  }
  fp.center_order = center;
  fp.derived_order = detail::naive_close(g, std::move(commutators)).size();
  return fp;
}

}  // namespace sgl::oracle
