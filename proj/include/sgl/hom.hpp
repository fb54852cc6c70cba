#pragma once

#include <deque>
#include <map>
#include <random>

#include "sgl/subgroup.hpp"

namespace sgl {

enum class VerifyPolicy { exhaustive, generators_sampled };

inline const char* policy_name(VerifyPolicy p) {
  return p == VerifyPolicy::exhaustive ? "exhaustive" : "generators+sampled";
}

// Total map between two groups with verification metadata. `table[x]` is the
// image of domain element x.
struct Homomorphism {
  Group domain;
  Group codomain;
  std::vector<ElementId> table;
  bool verified = false;
  VerifyPolicy policy = VerifyPolicy::exhaustive;
  bool surjective = false;
  std::uint64_t kernel_order = 0;
  std::optional<Subgroup> kernel;  // materialized for table-sized domains

  ElementId operator()(ElementId x) const { return table[x]; }
  bool injective() const { return kernel_order == 1; }
};

namespace detail {

inline bool check_hom_pairs(const Group& dom, const Group& cod,
                            const std::vector<ElementId>& table,
                            const Limits& lim, VerifyPolicy* policy) {
  const std::uint64_t n = dom.order();
  auto ok = [&](ElementId x, ElementId y) {
    return table[dom.mul(x, y)] == cod.mul(table[x], table[y]);
  };
  if (n <= lim.verify_exhaustive_bound) {
    *policy = VerifyPolicy::exhaustive;
    for (ElementId x = 0; x < n; ++x)
      for (ElementId y = 0; y < n; ++y)
        if (!ok(x, y)) return false;
    return true;
  }
  *policy = VerifyPolicy::generators_sampled;
  for (ElementId g : dom.generators())
    for (ElementId x = 0; x < n; ++x)
      if (!ok(g, x) || !ok(x, g)) return false;
  std::mt19937_64 rng(lim.seed);
  for (std::uint64_t i = 0; i < lim.sample_pairs; ++i)
    if (!ok(rng() % n, rng() % n)) return false;
  return true;
}

// Fills surjectivity/kernel metadata; `table` must already be total.
inline Homomorphism finish_hom(Group dom, Group cod,
                               std::vector<ElementId> table, const Limits& lim,
                               bool require_hom) {
  Homomorphism h;
  h.domain = std::move(dom);
  h.codomain = std::move(cod);
  h.table = std::move(table);
  h.verified = check_hom_pairs(h.domain, h.codomain, h.table, lim, &h.policy);
  if (require_hom && !h.verified)
    throw not_homomorphism_error("map fails the homomorphism check");
  std::vector<bool> hit(h.codomain.order(), false);
  std::uint64_t image = 0, kernel = 0;
  std::vector<ElementId> kernel_members;
  const bool keep_kernel = h.domain.order() <= lim.table_bound;
  for (ElementId x = 0; x < h.domain.order(); ++x) {
    ElementId y = h.table[x];
    if (!hit[y]) {
      hit[y] = true;
      ++image;
    }
    if (y == 0) {
      ++kernel;
      if (keep_kernel) kernel_members.push_back(x);
    }
  }
  h.surjective = image == h.codomain.order();
  h.kernel_order = kernel;
  if (keep_kernel)
    h.kernel = subgroup_from_members(h.domain, std::move(kernel_members));
  return h;
}

}  // namespace detail

// Builds a homomorphism from a callable on element ids.
template <typename F>
Homomorphism make_hom(const Group& dom, const Group& cod, F&& f,
                      const Limits& lim = {}, bool require_hom = true) {
  std::vector<ElementId> table(dom.order());
  for (ElementId x = 0; x < dom.order(); ++x) table[x] = f(x);
  return detail::finish_hom(dom, cod, std::move(table), lim, require_hom);
}

inline Homomorphism identity_hom(const Group& g, const Limits& lim = {}) {
  return make_hom(g, g, [](ElementId x) { return x; }, lim);
}

// Extends generator images to a total table by word evaluation. The keys
// must generate the domain; inconsistent images raise
// not_homomorphism_error.
inline Homomorphism hom(const Group& dom, const Group& cod,
                        const std::map<ElementId, ElementId>& generator_images,
                        const Limits& lim = {}) {
  const std::uint64_t n = dom.order();
  constexpr ElementId kUnset = ~ElementId{0};
  std::vector<ElementId> table(n, kUnset);
  table[0] = 0;
  std::deque<ElementId> queue{0};
  while (!queue.empty()) {
    ElementId x = queue.front();
    queue.pop_front();
    for (const auto& [g, img] : generator_images) {
      ElementId y = dom.mul(x, g);
      ElementId want = cod.mul(table[x], img);
      if (table[y] == kUnset) {
        table[y] = want;
        queue.push_back(y);
      } else if (table[y] != want) {
        throw not_homomorphism_error(
            "generator images are inconsistent at " + dom.label(y));
      }
    }
  }
  for (ElementId x = 0; x < n; ++x)
    if (table[x] == kUnset)
      throw precondition_error("generator images do not generate the domain");
  return detail::finish_hom(dom, cod, std::move(table), lim, true);
}

// Composition g2 after g1 (g1 first). Verified per policy.
inline Homomorphism compose(const Homomorphism& g2, const Homomorphism& g1,
                            const Limits& lim = {}) {
  if (g1.codomain.order() != g2.domain.order())
    throw precondition_error("composition domains do not align");
  return make_hom(g1.domain, g2.codomain,
                  [&](ElementId x) { return g2.table[g1.table[x]]; }, lim);
}

// Coset group G/N with the canonical projection. N must be normal.
inline std::pair<Group, Homomorphism> quotient(const Group& g,
                                               const Subgroup& n,
                                               const Limits& lim = {}) {
  if (n.parent.impl() != g.impl())
    throw domain_error("subgroup does not belong to this group");
  if (g.order() > lim.table_bound)
    throw capacity_error("quotient needs a table-sized parent", g.order());
  if (!is_normal(g, n)) throw not_normal_error("subgroup is not normal");
  const std::uint64_t order = g.order();
  std::vector<std::uint64_t> coset_of(order, ~std::uint64_t{0});
  std::vector<ElementId> reps;
  for (ElementId x = 0; x < order; ++x) {
    if (coset_of[x] != ~std::uint64_t{0}) continue;
    std::uint64_t c = reps.size();
    reps.push_back(x);  // x is the least member of its coset
    for (ElementId m : n.members) coset_of[g.mul(x, m)] = c;
  }
  const std::uint64_t q = reps.size();
  std::vector<std::uint32_t> table(q * q);
  for (std::uint64_t i = 0; i < q; ++i)
    for (std::uint64_t j = 0; j < q; ++j)
      table[i * q + j] =
          static_cast<std::uint32_t>(coset_of[g.mul(reps[i], reps[j])]);
  std::vector<std::string> labels(q);
  for (std::uint64_t i = 0; i < q; ++i) labels[i] = "[" + g.label(reps[i]) + "]";
  auto impl = std::make_shared<detail::CayleyGroup>(q, std::move(table),
                                                    std::move(labels));
  detail::tag_prime(impl.get());
  Group quot(impl);
  Homomorphism proj =
      make_hom(g, quot, [&](ElementId x) { return coset_of[x]; }, lim);
  proj.kernel = n;
  return {quot, proj};
}

// A Subgroup reindexed as a standalone Group, together with the embedding
// into the parent. Labels and the sort order of members are preserved.
struct EmbeddedGroup {
  Group group;
  Homomorphism embed;
};

inline EmbeddedGroup as_group(const Subgroup& s, const Limits& lim = {}) {
  if (s.order() > lim.table_bound)
    throw capacity_error("subgroup too large to reindex as a table group",
                         s.order());
  const Group& g = s.parent;
  const std::uint64_t n = s.order();
  auto index_of = [&](ElementId x) {
    return static_cast<std::uint64_t>(
        std::lower_bound(s.members.begin(), s.members.end(), x) -
        s.members.begin());
  };
  std::vector<std::uint32_t> table(n * n);
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < n; ++j)
      table[i * n + j] = static_cast<std::uint32_t>(
          index_of(g.mul(s.members[i], s.members[j])));
  std::vector<std::string> labels(n);
  for (std::uint64_t i = 0; i < n; ++i) labels[i] = g.label(s.members[i]);
  std::vector<ElementId> gens;
  for (ElementId x : s.generators) gens.push_back(index_of(x));
  auto impl = std::make_shared<detail::CayleyGroup>(
      n, std::move(table), std::move(labels), std::move(gens));
  detail::tag_prime(impl.get());
  Group sub(impl);
  Homomorphism embed =
      make_hom(sub, g, [&](ElementId i) { return s.members[i]; }, lim);
  return {sub, embed};
}

// Maps a subgroup of an embedded group back into the ambient parent.
inline Subgroup map_subgroup(const Subgroup& s, const Homomorphism& embed) {
  std::vector<ElementId> members, gens;
  for (ElementId x : s.members) members.push_back(embed.table[x]);
  for (ElementId x : s.generators) gens.push_back(embed.table[x]);
  std::sort(members.begin(), members.end());
  return Subgroup{embed.codomain, std::move(members), std::move(gens)};
}

}  // namespace sgl
