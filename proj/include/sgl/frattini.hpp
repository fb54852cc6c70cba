#pragma once

#include "sgl/hom.hpp"

namespace sgl {

inline bool is_p_group(const Group& g) {
  return g.order() == 1 || g.prime().has_value();
}

namespace detail {

// Incremental closure that supports adding generators after elements are
// already known; every member ends up multiplied by every generator.
class IncrementalClosure {
 public:
  explicit IncrementalClosure(const Group& g) : g_(g) {
    set_.insert(0);
    members_.push_back(0);
  }

  bool contains(ElementId x) const { return set_.count(x) != 0; }
  const std::vector<ElementId>& members() const { return members_; }

  void add_generator(ElementId x) {
    if (x == 0) return;
    gens_.push_back(x);
    for (std::size_t i = 0; i < members_.size(); ++i)
      push(g_.mul(members_[i], x));
    drain();
  }

  const std::vector<ElementId>& generators() const { return gens_; }

 private:
  void push(ElementId y) {
    if (set_.insert(y).second) {
      members_.push_back(y);
      work_.push_back(y);
    }
  }
  void drain() {
    while (!work_.empty()) {
      ElementId x = work_.back();
      work_.pop_back();
      for (ElementId s : gens_) push(g_.mul(x, s));
    }
  }

  const Group& g_;
  std::unordered_set<ElementId> set_;
  std::vector<ElementId> members_, work_, gens_;
};

// Normal closure of `seed` under conjugation by the group's generators.
// Returns the members (sorted) and the generator witness list.
inline std::pair<std::vector<ElementId>, std::vector<ElementId>>
normal_closure(const Group& g, std::vector<ElementId> seed) {
  IncrementalClosure cl(g);
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  for (ElementId x : seed)
    if (!cl.contains(x)) cl.add_generator(x);
  const auto ggens = g.generators();
  for (std::size_t i = 0; i < cl.generators().size(); ++i) {
    ElementId c = cl.generators()[i];
    for (ElementId a : ggens) {
      ElementId x = g.conj(a, c);
      if (!cl.contains(x)) cl.add_generator(x);
    }
  }
  auto members = cl.members();
  std::sort(members.begin(), members.end());
  return {std::move(members), cl.generators()};
}

}  // namespace detail

// Frattini subgroup of a subgroup: H^p[H,H], computed inside the parent.
inline Subgroup frattini_of(const Subgroup& h) {
  const Group& g = h.parent;
  std::uint64_t p;
  if (h.order() == 1) return trivial_subgroup(g);
  if (auto pp = detail::prime_power_base(h.order()))
    p = *pp;
  else
    throw domain_error("Frattini subgroup computed only for p-groups");
  std::vector<ElementId> gens;
  for (ElementId x : h.members) {
    ElementId y = g.power(x, p);
    if (y != 0) gens.push_back(y);
  }
  for (ElementId x : h.members)
    for (ElementId y : h.members) {
      ElementId c = g.commutator(x, y);
      if (c != 0) gens.push_back(c);
    }
  auto sub = generated_subgroup(g, std::move(gens));
  sub.generators = detail::trim_generators(g, sub.generators);
  return sub;
}

// Φ(G) = G^p[G,G]. Exhaustive power/commutator sweep for table-sized groups;
// generator-based normal closure for large structural ones.
inline Subgroup frattini(const Group& g, const Limits& lim = {}) {
  if (g.order() == 1) return trivial_subgroup(g);
  if (!is_p_group(g)) throw domain_error("Frattini subgroup needs a p-group");
  const std::uint64_t p = *g.prime();
  if (g.order() <= lim.table_bound) return frattini_of(whole_subgroup(g));
  // Φ(G) is the normal closure of the generator p-th powers and the
  // generator commutators.
  std::vector<ElementId> seed;
  const auto gens = g.generators();
  for (ElementId x : gens) seed.push_back(g.power(x, p));
  for (ElementId x : gens)
    for (ElementId y : gens) seed.push_back(g.commutator(x, y));
  auto [members, witness] = detail::normal_closure(g, std::move(seed));
  return Subgroup{g, std::move(members), std::move(witness)};
}

namespace detail {

inline std::uint64_t log_base(std::uint64_t p, std::uint64_t n) {
  std::uint64_t d = 0;
  while (n > 1) {
    if (n % p != 0) throw domain_error("index is not a power of p");
    n /= p;
    ++d;
  }
  return d;
}

}  // namespace detail

// d(H) = log_p(|H| / |Φ(H)|), the Burnside basis rank of a p-subgroup.
inline std::uint64_t rank_of(const Subgroup& h) {
  if (h.order() == 1) return 0;
  auto p = detail::prime_power_base(h.order());
  if (!p) throw domain_error("rank is defined for p-groups only");
  return detail::log_base(*p, h.order() / frattini_of(h).order());
}

// d(G), the minimal number of generators of a p-group.
inline std::uint64_t rank(const Group& g, const Limits& lim = {}) {
  if (g.order() == 1) return 0;
  if (!is_p_group(g)) throw domain_error("rank is defined for p-groups only");
  return detail::log_base(*g.prime(), g.order() / frattini(g, lim).order());
}

// Ā = A / A^p[A,H] with its projection and rank.
struct RankedQuotient {
  Subgroup source;     // A
  Subgroup relative;   // A^p[A,H], as a subgroup of the common parent
  Group quotient;      // Ā, elementary abelian
  Homomorphism projection;  // from as_group(A).group onto Ā
  Homomorphism embed;       // as_group(A) embedding back into the parent
  std::uint64_t rank = 0;   // d(Ā) = log_p |Ā|
};

inline RankedQuotient reduced_quotient(const Subgroup& a, const Subgroup& h,
                                       const Limits& lim = {}) {
  if (a.parent.impl() != h.parent.impl())
    throw domain_error("reduced quotient needs a common parent");
  if (!a.is_abelian()) throw domain_error("A must be abelian");
  // H normalizing A is all [A,H] needs; A need not be normal in the full
  // parent (the graded construction descends into proper subgroups)
  if (!detail::normal_under(a, h.generators))
    throw domain_error("H must normalize A");
  if (a.order() == 1) {
    auto [ag, embed] = as_group(a, lim);
    auto [quot, proj] = quotient(ag, trivial_subgroup(ag), lim);
    return RankedQuotient{a,    trivial_subgroup(a.parent), quot,
                          proj, embed,                      0};
  }
  auto p = detail::prime_power_base(a.order());
  if (!p) throw domain_error("A must be a p-group");
  Subgroup ap = agemo(a, *p);
  Subgroup comm = relative_commutator(a, h);
  std::vector<ElementId> rel_gens = ap.generators;
  rel_gens.insert(rel_gens.end(), comm.generators.begin(),
                  comm.generators.end());
  Subgroup relative = generated_subgroup(a.parent, std::move(rel_gens));
  relative.generators =
      detail::trim_generators(a.parent, relative.generators);

  auto [ag, embed] = as_group(a, lim);
  auto index_of = [&](ElementId x) {
    return static_cast<ElementId>(
        std::lower_bound(a.members.begin(), a.members.end(), x) -
        a.members.begin());
  };
  std::vector<ElementId> rel_in_a;
  for (ElementId x : relative.members) rel_in_a.push_back(index_of(x));
  auto [quot, proj] = quotient(ag, subgroup_from_members(ag, rel_in_a), lim);
  RankedQuotient rq;
  rq.source = a;
  rq.relative = std::move(relative);
  rq.quotient = quot;
  rq.projection = std::move(proj);
  rq.embed = std::move(embed);
  rq.rank = quot.order() == 1 ? 0 : detail::log_base(*p, quot.order());
  return rq;
}

// Greedy F_p-basis of an elementary abelian group, ascending by element id.
inline std::vector<ElementId> elementary_basis(const Group& q) {
  std::vector<ElementId> basis;
  std::unordered_set<ElementId> span{0};
  for (ElementId x = 1; x < q.order(); ++x) {
    if (span.count(x)) continue;
    basis.push_back(x);
    span.clear();
    for (ElementId y : detail::closure(q, basis)) span.insert(y);
  }
  return basis;
}

// A_m: lifts the basis of Ā through the lowest-id representatives.
// Satisfies A^p[A,H] · A_m = A and d(A_m) = d(Ā).
inline Subgroup minimal_lift(const RankedQuotient& rq) {
  const auto basis = elementary_basis(rq.quotient);
  std::vector<ElementId> reps;
  for (ElementId b : basis) {
    for (ElementId x = 0; x < rq.projection.domain.order(); ++x)
      if (rq.projection.table[x] == b) {
        reps.push_back(rq.embed.table[x]);
        break;
      }
  }
  return generated_subgroup(rq.source.parent, std::move(reps));
}

// Invariant factor orders of an abelian group's primary decomposition,
// sorted descending, e.g. {4, 2} for C4 x C2.
inline std::vector<std::uint64_t> abelian_type(const Group& g) {
  if (!g.is_abelian()) throw domain_error("abelian_type needs an abelian group");
  std::uint64_t n = g.order();
  if (n == 1) return {};
  // per-prime partitions from the element-order histogram
  std::map<std::uint64_t, std::vector<std::uint64_t>> primary;  // p -> parts
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m; ++p)
    while (m % p == 0) {
      primary[p];
      m /= p;
    }
  if (m > 1) primary[m];
  for (auto& [p, parts] : primary) {
    // count elements of order dividing p^j; differences recover the partition
    std::vector<std::uint64_t> cnt{1};
    std::uint64_t pj = 1;
    while (true) {
      pj *= p;
      std::uint64_t c = 0;
      for (ElementId x = 0; x < g.order(); ++x)
        if (g.power(x, pj) == 0) ++c;
      cnt.push_back(c);
      if (c == cnt[cnt.size() - 2]) break;
    }
    // lambda'_j = log_p(cnt[j]/cnt[j-1]) gives the conjugate partition
    std::vector<std::uint64_t> conj;
    for (std::size_t j = 1; j < cnt.size(); ++j) {
      std::uint64_t d = detail::log_base(p, cnt[j] / cnt[j - 1]);
      if (d > 0) conj.push_back(d);
    }
    std::uint64_t rows = conj.empty() ? 0 : conj[0];
    for (std::uint64_t i = 0; i < rows; ++i) {
      std::uint64_t e = 0;
      for (std::uint64_t c : conj)
        if (c > i) ++e;
      std::uint64_t q = 1;
      for (std::uint64_t k = 0; k < e; ++k) q *= p;
      parts.push_back(q);
    }
  }
  // merge primary parts into invariant factors (largest first)
  std::vector<std::uint64_t> factors;
  bool more = true;
  std::size_t idx = 0;
  while (more) {
    more = false;
    std::uint64_t f = 1;
    for (auto& [p, parts] : primary)
      if (idx < parts.size()) {
        f *= parts[idx];
        more = true;
      }
    if (more) factors.push_back(f);
    ++idx;
  }
  return factors;
}

inline std::string abelian_type_name(const Group& g) {
  auto factors = abelian_type(g);
  if (factors.empty()) return "C1";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "x";
    out += "C" + std::to_string(factors[i]);
  }
  return out;
}

}  // namespace sgl
