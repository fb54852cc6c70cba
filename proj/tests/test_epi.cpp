#include <catch_amalgamated.hpp>

#include "sgl/catalog.hpp"
#include "sgl/epi.hpp"

using namespace sgl;

TEST_CASE("semidirect epi from a minimal decomposition") {
  Group d8 = dihedral(8);
  Homomorphism psi_d8 = semidirect_epi(minimal_decomposition(d8));
  CHECK(psi_d8.verified);
  CHECK(psi_d8.surjective);
  CHECK(psi_d8.injective());  // A ∩ H trivial, so 4*2 = 8

  Group q8 = quaternion(8);
  Homomorphism psi_q8 = semidirect_epi(minimal_decomposition(q8));
  CHECK(psi_q8.verified);
  CHECK(psi_q8.surjective);
  CHECK(psi_q8.domain.order() == 16);
  CHECK(psi_q8.kernel_order == 2);
  CHECK(rank(psi_q8.domain) == 2);
}

TEST_CASE("wreath base epi") {
  // Klein = C2 x C2 with trivial conjugation: C2 wr C2 -> Klein
  Group klein = abelian({2, 2});
  Subgroup a = generated_subgroup(klein, {2});
  Subgroup h = generated_subgroup(klein, {1});
  EmbeddedGroup ea = as_group(a);
  EmbeddedGroup eh = as_group(h);
  Homomorphism phi =
      base_epi(ea.group, eh.group, klein, ea.embed, eh.embed);
  CHECK(phi.domain.order() == 8);
  CHECK(phi.verified);
  CHECK(phi.surjective);
  CHECK(phi.kernel_order == 2);

  // Q8 = <i><j>: C4 wr C4 -> Q8
  Group q8 = quaternion(8);
  EmbeddedGroup qi = as_group(generated_subgroup(q8, {2}));
  EmbeddedGroup qj = as_group(generated_subgroup(q8, {1}));
  Homomorphism phi_q =
      base_epi(qi.group, qj.group, q8, qi.embed, qj.embed);
  CHECK(phi_q.domain.order() == 1024);
  CHECK(phi_q.verified);
  CHECK(phi_q.surjective);
  CHECK(rank(phi_q.domain) == 2);
  CHECK(rank(phi_q.domain) == rank(q8));
}

TEST_CASE("second-argument lift") {
  Group c4 = cyclic(4);
  Group c2 = cyclic(2);
  Homomorphism psi = hom(c4, c2, {{1, 1}});

  for (Group a : {cyclic(2), cyclic(4)}) {
    Homomorphism lifted = lift_second_argument(a, psi);
    CHECK(lifted.verified);
    CHECK(lifted.surjective);
    CHECK(lifted.domain.order() == a.order() * a.order() * a.order() * a.order() * 4);
    // pointwise product rule: the base component at y multiplies f over the
    // fiber psi^{-1}(y)
    const Group& w1 = lifted.domain;
    const Group& w2 = lifted.codomain;
    for (ElementId x = 0; x < w1.order(); ++x) {
      ElementId fx = x / 4;  // base tuple index, top is C4
      ElementId y = lifted(x);
      ElementId gy = y % 2;
      CHECK(gy == psi(x % 4));
      ElementId fy = y / 2;
      // decode both tuples and compare fiber products
      for (ElementId t = 0; t < 2; ++t) {
        ElementId expect = 0;
        for (ElementId k = 0; k < 4; ++k) {
          if (psi(k) != t) continue;
          ElementId fk = fx;
          for (ElementId s = 0; s < k; ++s) fk /= a.order();
          expect = a.mul(expect, fk % a.order());
        }
        ElementId got = fy;
        for (ElementId s = 0; s < t; ++s) got /= a.order();
        CHECK(got % a.order() == expect);
      }
    }
    (void)w2;
  }
}

TEST_CASE("identity lift is the identity") {
  Group c2 = cyclic(2);
  Homomorphism id = identity_hom(c2);
  Homomorphism lifted = lift_second_argument(c2, id);
  CHECK(lifted.injective());
  CHECK(lifted.surjective);
}

TEST_CASE("rank preservation predicate") {
  Group c4 = cyclic(4);
  Group c2 = cyclic(2);
  CHECK(is_rank_preserving(identity_hom(c4)));
  CHECK(is_rank_preserving(hom(c4, c2, {{1, 1}})));
  Group klein = abelian({2, 2});
  CHECK_FALSE(is_rank_preserving(hom(klein, c2, {{1, 1}, {2, 0}})));
}

TEST_CASE("semidirect towers") {
  TowerReport ab = semidirect_tower(abelian({4, 2}));
  CHECK(ab.tower.order() == 8);
  CHECK(ab.epi.injective());
  CHECK(ab.rank_preserving);

  TowerReport td = semidirect_tower(dihedral(8));
  CHECK(td.tower.order() == 8);
  CHECK(td.epi.verified);
  CHECK(td.epi.surjective);
  CHECK(td.rank_preserving);

  TowerReport tq = semidirect_tower(quaternion(8));
  CHECK(tq.tower.order() == 16);
  CHECK(tq.epi.kernel_order == 2);
  CHECK(tq.rank_preserving);
}

TEST_CASE("wreath towers") {
  TowerReport t1 = wreath_tower(cyclic(8));
  CHECK(t1.tower.order() == 8);
  CHECK(t1.abelian_layers.size() == 1);
  CHECK(t1.rank_preserving);

  TowerReport tk = wreath_tower(abelian({2, 2}));
  CHECK(tk.abelian_layers.size() == 2);
  CHECK(tk.tower.order() == 8);  // C2 wr C2
  CHECK(tk.rank_sum == 2);
  CHECK(tk.rank_preserving);
  CHECK(tk.epi.verified);
  CHECK(tk.epi.surjective);

  TowerReport td = wreath_tower(dihedral(8));
  CHECK(td.rank_sum == 2);
  CHECK(td.rank_preserving);
  CHECK(td.epi.verified);
  CHECK(td.epi.surjective);

  TowerReport tq = wreath_tower(quaternion(8));
  CHECK(tq.tower.order() == 1024);  // C4 wr C4
  CHECK(tq.rank_sum == 2);
  CHECK(tq.rank_preserving);
  CHECK(tq.epi.verified);
  CHECK(tq.epi.surjective);
}

TEST_CASE("towers reject non-p-groups") {
  CHECK_THROWS_AS(wreath_tower(cyclic(6)), domain_error);
  CHECK_THROWS_AS(semidirect_tower(cyclic(6)), domain_error);
}
