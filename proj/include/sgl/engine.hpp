#pragma once

#include <mutex>

#include "sgl/frattini.hpp"

namespace sgl {

// G = AH with A normal abelian and H a proper semiabelian subgroup.
struct Decomposition {
  Group parent;
  Subgroup a;
  Subgroup h;
  bool a_minimal = false;
  bool h_minimal = false;
};

// Ascending chain realizing semiabelianity: H_{i+1} = A_i H_i, with H_1
// trivial and the last product equal to the whole group.
struct DecompositionChain {
  std::vector<std::pair<Subgroup, Subgroup>> steps;  // (A_i, H_i)
};

// Decision procedure for semiabelianity and minimal decompositions within
// one ambient group. Caches the subgroup lattice and memoizes the recursive
// check by member set.
class Engine {
 public:
  explicit Engine(Group g, Limits lim = {}) : g_(std::move(g)), lim_(lim) {}

  const Group& group() const { return g_; }
  const Limits& limits() const { return lim_; }

  const std::vector<Subgroup>& lattice() {
    if (lattice_.empty()) lattice_ = all_subgroups(g_, lim_);
    return lattice_;
  }

  bool semiabelian() { return semiabelian(whole_subgroup(g_)); }

  // True iff S is trivial, abelian, or S = AH for a normal abelian A and a
  // proper semiabelian H. Candidates scanned ascending by (order, lex).
  bool semiabelian(const Subgroup& s) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = memo_.find(s.members);
      if (it != memo_.end()) return it->second;
    }
    bool result = s.is_trivial() || s.is_abelian();
    if (!result) {
      for (const Subgroup& a : lattice()) {
        if (a.is_trivial() || !a.subset_of(s)) continue;
        if (!a.is_abelian() || !detail::normal_under(a, s.generators))
          continue;
        if (find_complement(s, a) != nullptr) {
          result = true;
          break;
        }
      }
    }
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(s.members, result);
    return result;
  }

  // First H ascending by (order, lex) with H proper in S, AH = S and H
  // semiabelian; nullptr when none exists.
  const Subgroup* find_complement(const Subgroup& s, const Subgroup& a) {
    for (const Subgroup& h : lattice()) {
      if (!h.subset_of(s) || h.order() >= s.order()) continue;
      if (product_size(a, h) != s.order()) continue;
      if (semiabelian(h)) return &h;
    }
    return nullptr;
  }

  Decomposition minimal_decomposition() {
    return minimal_decomposition(whole_subgroup(g_));
  }

  // Two-stage minimality: first A ascending by (order, lex) admitting any
  // valid complement, then the first valid H for that A. The first hit of
  // the ascending scan is inclusion-minimal.
  Decomposition minimal_decomposition(const Subgroup& s) {
    if (s.is_trivial())
      throw no_decomposition_error("the trivial group has no decomposition");
    if (!semiabelian(s))
      throw not_semiabelian_error("group is not semiabelian");
    for (const Subgroup& a : lattice()) {
      if (a.is_trivial() || !a.subset_of(s)) continue;
      if (!a.is_abelian() || !detail::normal_under(a, s.generators)) continue;
      if (const Subgroup* h = find_complement(s, a))
        return Decomposition{g_, a, *h, true, true};
    }
    throw not_semiabelian_error("no decomposition found");  // unreachable
  }

  // Prop-style containment on a minimal decomposition:
  // A ∩ H ⊆ A^p[A,H] ∩ Φ(H).
  bool verify_cap_condition(const Decomposition& d) {
    auto p = detail::prime_power_base(d.a.order() == 1
                                          ? product_size(d.a, d.h)
                                          : d.a.order());
    if (!p) throw domain_error("cap condition needs a p-group");
    Subgroup ap = agemo(d.a, *p);
    Subgroup comm = relative_commutator(d.a, d.h);
    std::vector<ElementId> gens = ap.generators;
    gens.insert(gens.end(), comm.generators.begin(), comm.generators.end());
    Subgroup relative = generated_subgroup(g_, std::move(gens));
    Subgroup phi_h = frattini_of(d.h);
    for (ElementId x : intersect_members(d.a, d.h))
      if (!relative.contains(x) || !phi_h.contains(x)) return false;
    return true;
  }

  // Iterates minimal decompositions down to the trivial group, reversed into
  // ascending order.
  DecompositionChain decomposition_chain() {
    if (!semiabelian()) throw not_semiabelian_error("group is not semiabelian");
    DecompositionChain chain;
    if (g_.order() == 1) return chain;
    build_chain(whole_subgroup(g_), &chain);
    return chain;
  }

  // Semiabelian subgroups H_1 <= ... <= H_r = G with d(H_i) = i, built by
  // splitting off one basis direction of Ā per step.
  std::vector<Subgroup> rank_graded_chain() {
    if (!semiabelian()) throw not_semiabelian_error("group is not semiabelian");
    std::vector<Subgroup> chain;
    build_graded(whole_subgroup(g_), &chain);
    return chain;
  }

 private:
  void build_chain(const Subgroup& s, DecompositionChain* chain) {
    Decomposition d = minimal_decomposition(s);
    if (!d.h.is_trivial()) build_chain(d.h, chain);
    chain->steps.emplace_back(d.a, d.h);
  }

  void build_graded(const Subgroup& s, std::vector<Subgroup>* chain) {
    if (s.is_trivial()) return;
    if (rank_of(s) == 1) {
      chain->push_back(s);
      return;
    }
    Decomposition d = minimal_decomposition(s);
    RankedQuotient rq = reduced_quotient(d.a, d.h, lim_);
    if (rq.rank <= 1) {
      // d(A-bar) = 1, so H itself already has rank d(s) - 1
      build_graded(d.h, chain);
      chain->push_back(s);
      return;
    }
    auto basis = elementary_basis(rq.quotient);
    // preimage of the span of all basis vectors but the first
    std::vector<ElementId> rest(basis.begin() + 1, basis.end());
    Subgroup span = generated_subgroup(rq.quotient, rest);
    std::vector<ElementId> a2_gens = rq.relative.generators;
    for (ElementId x = 0; x < rq.projection.domain.order(); ++x)
      if (span.contains(rq.projection.table[x]))
        a2_gens.push_back(rq.embed.table[x]);
    std::vector<ElementId> hp_gens = a2_gens;
    hp_gens.insert(hp_gens.end(), d.h.generators.begin(),
                   d.h.generators.end());
    Subgroup hp = generated_subgroup(g_, std::move(hp_gens));
    hp.generators = detail::trim_generators(g_, hp.generators);
    build_graded(hp, chain);
    chain->push_back(s);
  }

  Group g_;
  Limits lim_;
  std::vector<Subgroup> lattice_;
  std::map<std::vector<ElementId>, bool> memo_;
  std::mutex mu_;
};

inline bool is_semiabelian(const Group& g, const Limits& lim = {}) {
  return Engine(g, lim).semiabelian();
}

inline Decomposition minimal_decomposition(const Group& g,
                                           const Limits& lim = {}) {
  return Engine(g, lim).minimal_decomposition();
}

inline bool verify_cap_condition(const Decomposition& d,
                                 const Limits& lim = {}) {
  Engine e(d.parent, lim);
  return e.verify_cap_condition(d);
}

inline DecompositionChain decomposition_chain(const Group& g,
                                              const Limits& lim = {}) {
  return Engine(g, lim).decomposition_chain();
}

inline std::vector<Subgroup> rank_graded_chain(const Group& g,
                                               const Limits& lim = {}) {
  return Engine(g, lim).rank_graded_chain();
}

}  // namespace sgl
