#include <catch_amalgamated.hpp>

#include "sgl/catalog.hpp"
#include "sgl/engine.hpp"

using namespace sgl;

TEST_CASE("semiabelian decisions") {
  CHECK(is_semiabelian(trivial_group()));
  CHECK(is_semiabelian(cyclic(8)));
  CHECK(is_semiabelian(abelian({4, 2})));
  CHECK(is_semiabelian(dihedral(8)));
  CHECK(is_semiabelian(quaternion(8)));
  CHECK(is_semiabelian(heisenberg(3)));
  CHECK(is_semiabelian(dihedral(16)));
  CHECK(is_semiabelian(quaternion(16)));
  CHECK(is_semiabelian(semidihedral(16)));
  CHECK(is_semiabelian(modular_group(16)));
}

TEST_CASE("minimal decompositions") {
  Group klein = abelian({2, 2});
  Decomposition dk = minimal_decomposition(klein);
  CHECK(dk.a.order() == 2);
  CHECK(dk.h.order() == 2);
  CHECK(intersect_members(dk.a, dk.h).size() == 1);

  Group d8 = dihedral(8);
  Decomposition dd = minimal_decomposition(d8);
  CHECK(dd.a.order() == 4);
  CHECK(dd.h.order() == 2);
  CHECK(dd.a.is_abelian());
  CHECK(is_normal(d8, dd.a));
  CHECK(product_size(dd.a, dd.h) == 8);

  Group q8 = quaternion(8);
  Decomposition dq = minimal_decomposition(q8);
  CHECK(dq.a.order() == 4);
  CHECK(dq.h.order() == 4);
  CHECK(intersect_members(dq.a, dq.h).size() == 2);  // the center
}

TEST_CASE("cap condition on minimal decompositions") {
  for (Group g : {abelian({2, 2}), dihedral(8), quaternion(8), dihedral(16),
                  quaternion(16), heisenberg(3)}) {
    Engine eng(g);
    REQUIRE(eng.semiabelian());
    Decomposition d = eng.minimal_decomposition();
    CHECK(eng.verify_cap_condition(d));
  }
}

TEST_CASE("decomposition chains") {
  Group c8 = cyclic(8);
  DecompositionChain abelian_chain = decomposition_chain(c8);
  CHECK(abelian_chain.steps.size() == 1);
  CHECK(abelian_chain.steps[0].first.is_whole());
  CHECK(abelian_chain.steps[0].second.is_trivial());

  Group q8 = quaternion(8);
  DecompositionChain cq = decomposition_chain(q8);
  REQUIRE(cq.steps.size() == 2);
  // H_1 trivial < H_2 = A_1 < Q8 = A_2 H_2 with A_1 of order 4
  CHECK(cq.steps[0].second.is_trivial());
  CHECK(cq.steps[0].first.order() == 4);
  CHECK(cq.steps[1].second.order() == 4);
  CHECK(product_size(cq.steps[1].first, cq.steps[1].second) == 8);

  Group d8 = dihedral(8);
  DecompositionChain cd = decomposition_chain(d8);
  REQUIRE(cd.steps.size() == 2);
  CHECK(cd.steps[0].first.order() == 2);

  // ascending-chain invariants on a bigger case
  Group h3 = heisenberg(3);
  DecompositionChain ch = decomposition_chain(h3);
  Subgroup prev = trivial_subgroup(h3);
  for (const auto& [a, h] : ch.steps) {
    CHECK(h.same_members(prev));
    CHECK(a.is_abelian());
    CHECK(is_normal_in(generated_subgroup(h3, product_set(a, h)), a));
    prev = generated_subgroup(h3, product_set(a, h));
  }
  CHECK(prev.is_whole());
}

TEST_CASE("rank-graded chains") {
  Group c8 = cyclic(8);
  auto chain1 = rank_graded_chain(c8);
  REQUIRE(chain1.size() == 1);
  CHECK(chain1[0].is_whole());

  Group klein = abelian({2, 2});
  auto chain2 = rank_graded_chain(klein);
  REQUIRE(chain2.size() == 2);
  CHECK(rank_of(chain2[0]) == 1);
  CHECK(chain2[1].is_whole());

  Group d8 = dihedral(8);
  auto chain3 = rank_graded_chain(d8);
  REQUIRE(chain3.size() == 2);
  CHECK(rank_of(chain3[0]) == 1);
  CHECK(is_semiabelian(as_group(chain3[0]).group));
  CHECK(chain3[1].is_whole());
}

TEST_CASE("rank additivity across minimal decompositions") {
  for (Group g : {abelian({2, 2}), dihedral(8), quaternion(8), dihedral(16),
                  semidihedral(16), heisenberg(3), abelian({4, 2, 2})}) {
    Engine eng(g);
    REQUIRE(eng.semiabelian());
    Decomposition d = eng.minimal_decomposition();
    RankedQuotient rq = reduced_quotient(d.a, d.h);
    CHECK(rank(g) == rq.rank + rank_of(d.h));
  }
}
