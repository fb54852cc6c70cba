#pragma once

#include "sgl/engine.hpp"

namespace sgl {

// Result of an iterated tower construction with its epimorphism onto the
// target group.
struct TowerReport {
  std::vector<Group> abelian_layers;  // A_1 ... A_k
  Group tower;
  Homomorphism epi;  // tower -> target
  std::uint64_t rank_sum = 0;
  std::uint64_t target_rank = 0;
  bool rank_preserving = false;
};

// ψ: A ⋊ H -> G, (a,h) -> ah, with H acting on A by conjugation in G.
// Rank preserving whenever the decomposition is minimal.
inline Homomorphism semidirect_epi(const Decomposition& d,
                                   const Limits& lim = {}) {
  const Group& g = d.parent;
  auto [ag, embed_a] = as_group(d.a, lim);
  auto [hg, embed_h] = as_group(d.h, lim);
  auto a_index = [&, &a = d.a](ElementId x) {
    return static_cast<ElementId>(
        std::lower_bound(a.members.begin(), a.members.end(), x) -
        a.members.begin());
  };
  Action act;
  act.top = hg;
  act.base = ag;
  act.auto_table.resize(hg.order());
  for (ElementId h = 0; h < hg.order(); ++h) {
    act.auto_table[h].resize(ag.order());
    for (ElementId a = 0; a < ag.order(); ++a)
      act.auto_table[h][a] =
          a_index(g.conj(embed_h.table[h], embed_a.table[a]));
  }
  Group e = semidirect_product(ag, hg, act, lim);
  const std::uint64_t nh = hg.order();
  return make_hom(
      e, g,
      [&](ElementId x) {
        return g.mul(embed_a.table[x / nh], embed_h.table[x % nh]);
      },
      lim);
}

// φ: Am ≀ H -> G, (f,h) -> (∏_{t∈H} t f(t) t^{-1}) h, factors taken in
// ascending t. Both Am and H are given with verified injective embeddings
// into G; their images must generate G.
inline Homomorphism base_epi(const Group& am, const Group& h, const Group& g,
                             const Homomorphism& embed_a,
                             const Homomorphism& embed_h,
                             const Limits& lim = {}) {
  if (!embed_a.verified || !embed_a.injective() || !embed_h.verified ||
      !embed_h.injective())
    throw precondition_error("base_epi needs verified injective embeddings");
  std::vector<ElementId> image_gens;
  for (ElementId x : embed_a.table) image_gens.push_back(x);
  for (ElementId x : embed_h.table) image_gens.push_back(x);
  if (generated_subgroup(g, image_gens).order() != g.order())
    throw not_surjective_error("images of Am and H do not generate G");

  Group w = wreath_product(am, h, lim);
  const std::uint64_t nt = h.order();
  const std::uint64_t na = am.order();
  // conjugated factors precomputed: conj_tab[t][a] = t^{-1} a t in G. The
  // inverse matches the wreath convention f^{g^{-1}}(s) = f(s g); conjugating
  // by t instead only works at p = 2, where every top section is an
  // involution.
  std::vector<std::vector<ElementId>> conj_tab(nt,
                                               std::vector<ElementId>(na));
  for (ElementId t = 0; t < nt; ++t)
    for (ElementId a = 0; a < na; ++a)
      conj_tab[t][a] =
          g.conj(g.inverse(embed_h.table[t]), embed_a.table[a]);
  return make_hom(
      w, g,
      [&](ElementId x) {
        ElementId top = x % nt, fx = x / nt;
        ElementId acc = 0;
        for (ElementId t = 0; t < nt; ++t) {
          acc = g.mul(acc, conj_tab[t][fx % na]);
          fx /= na;
        }
        return g.mul(acc, embed_h.table[top]);
      },
      lim);
}

// ψ̃: A ≀ G -> A ≀ H induced by ψ: G -> H, with
// ψ̃(f,g) = (ψ̂(f), ψ(g)) and ψ̂(f)(y) = ∏_{k ∈ ψ^{-1}(y)} f(k).
// A must be abelian so the preimage product is order-independent.
inline Homomorphism lift_second_argument(const Group& a,
                                         const Homomorphism& psi,
                                         const Limits& lim = {}) {
  if (!psi.verified || !psi.surjective)
    throw precondition_error("lift needs a verified epimorphism");
  if (!a.is_abelian()) throw domain_error("lift base must be abelian");
  Group wdom = wreath_product(a, psi.domain, lim);
  Group wcod = wreath_product(a, psi.codomain, lim);
  const std::uint64_t ng = psi.domain.order();
  const std::uint64_t nh = psi.codomain.order();
  const std::uint64_t na = a.order();
  return make_hom(
      wdom, wcod,
      [&](ElementId x) {
        ElementId top = x % ng, fx = x / ng;
        std::vector<ElementId> lifted(nh, 0);
        for (ElementId k = 0; k < ng; ++k) {
          lifted[psi.table[k]] = a.mul(lifted[psi.table[k]], fx % na);
          fx /= na;
        }
        ElementId rf = 0, wgt = 1;
        for (ElementId y = 0; y < nh; ++y) {
          rf += lifted[y] * wgt;
          wgt *= na;
        }
        return rf * nh + psi.table[top];
      },
      lim);
}

// Verified epimorphism + both sides p-groups + equal Burnside ranks.
inline bool is_rank_preserving(const Homomorphism& phi, const Limits& lim = {}) {
  if (!phi.verified || !phi.surjective)
    throw precondition_error("rank preservation needs a verified epimorphism");
  if (!is_p_group(phi.domain) || !is_p_group(phi.codomain))
    throw domain_error("rank preservation is defined for p-groups");
  return rank(phi.domain, lim) == rank(phi.codomain, lim);
}

// Right-nested semidirect tower A_1 ⋊ (A_2 ⋊ (... A_r)) with a rank
// preserving epimorphism onto G. The inner tower acts on each layer through
// its own epimorphism.
inline TowerReport semidirect_tower(const Group& g, const Limits& lim = {}) {
  if (!is_p_group(g)) throw domain_error("semidirect tower needs a p-group");
  TowerReport report;
  report.target_rank = rank(g, lim);
  if (g.is_abelian()) {
    report.abelian_layers = {g};
    report.tower = g;
    report.epi = identity_hom(g, lim);
  } else {
    Engine engine(g, lim);
    Decomposition d = engine.minimal_decomposition();
    auto [ag, embed_a] = as_group(d.a, lim);
    auto [hg, embed_h] = as_group(d.h, lim);
    TowerReport inner = semidirect_tower(hg, lim);
    auto a_index = [&, &a = d.a](ElementId x) {
      return static_cast<ElementId>(
          std::lower_bound(a.members.begin(), a.members.end(), x) -
          a.members.begin());
    };
    // the inner tower acts on A via its epimorphism onto H, then by
    // conjugation in G
    Action act;
    act.top = inner.tower;
    act.base = ag;
    act.auto_table.resize(inner.tower.order());
    for (ElementId t = 0; t < inner.tower.order(); ++t) {
      ElementId h = embed_h.table[inner.epi.table[t]];
      act.auto_table[t].resize(ag.order());
      for (ElementId a = 0; a < ag.order(); ++a)
        act.auto_table[t][a] = a_index(g.conj(h, embed_a.table[a]));
    }
    Group tower = semidirect_product(ag, inner.tower, act, lim);
    const std::uint64_t nt = inner.tower.order();
    report.epi = make_hom(
        tower, g,
        [&](ElementId x) {
          return g.mul(embed_a.table[x / nt],
                       embed_h.table[inner.epi.table[x % nt]]);
        },
        lim);
    report.tower = tower;
    report.abelian_layers = {ag};
    report.abelian_layers.insert(report.abelian_layers.end(),
                                 inner.abelian_layers.begin(),
                                 inner.abelian_layers.end());
  }
  for (const Group& layer : report.abelian_layers)
    report.rank_sum += rank(layer, lim);
  report.rank_preserving =
      is_p_group(report.tower) &&
      rank(report.tower, lim) == report.target_rank;
  return report;
}

// Iterated wreath tower A_m ≀ (A_2 ≀ (... A_k)) with Σ d(A_i) = d(G) and a
// rank preserving epimorphism onto G, built by recursion on d(G): lift the
// inner tower's epimorphism to the wreath product, then compose with the
// base epimorphism.
inline TowerReport wreath_tower(const Group& g, const Limits& lim = {}) {
  if (!is_p_group(g)) throw domain_error("wreath tower needs a p-group");
  TowerReport report;
  report.target_rank = rank(g, lim);
  if (report.target_rank <= 1) {
    report.abelian_layers = {g};
    report.tower = g;
    report.epi = identity_hom(g, lim);
  } else {
    Engine engine(g, lim);
    Decomposition d = engine.minimal_decomposition();
    RankedQuotient rq = reduced_quotient(d.a, d.h, lim);
    Subgroup am_sub = minimal_lift(rq);
    auto [am, embed_am_in_g] = as_group(am_sub, lim);
    auto [hg, embed_h] = as_group(d.h, lim);
    TowerReport inner = wreath_tower(hg, lim);
    Homomorphism lifted = lift_second_argument(am, inner.epi, lim);
    Homomorphism base = base_epi(am, hg, g, embed_am_in_g, embed_h, lim);
    report.epi = compose(base, lifted, lim);
    report.tower = lifted.domain;
    report.abelian_layers = {am};
    report.abelian_layers.insert(report.abelian_layers.end(),
                                 inner.abelian_layers.begin(),
                                 inner.abelian_layers.end());
  }
  for (const Group& layer : report.abelian_layers)
    report.rank_sum += rank(layer, lim);
  if (report.rank_sum != report.target_rank)
    throw error("wreath tower layer ranks do not sum to d(G)");
  report.rank_preserving = rank(report.tower, lim) == report.target_rank;
  return report;
}

}  // namespace sgl
