#include <catch_amalgamated.hpp>

#include "sgl/catalog.hpp"
#include "sgl/hom.hpp"

using namespace sgl;

TEST_CASE("identity homomorphism") {
  Group d8 = dihedral(8);
  Homomorphism id = identity_hom(d8);
  CHECK(id.verified);
  CHECK(id.surjective);
  CHECK(id.kernel_order == 1);
  CHECK(id.injective());
}

TEST_CASE("hom from generator images") {
  Group c4 = cyclic(4);
  Group c2 = cyclic(2);
  Homomorphism psi = hom(c4, c2, {{1, 1}});
  CHECK(psi.verified);
  CHECK(psi.surjective);
  CHECK(psi.kernel_order == 2);
  CHECK(psi(0) == 0);
  CHECK(psi(2) == 0);
  CHECK(psi(1) == 1);

  // D8 -> C2 killing the rotation
  Group d8 = dihedral(8);
  Homomorphism kill = hom(d8, c2, {{2, 0}, {1, 1}});
  CHECK(kill.verified);
  CHECK(kill.surjective);
  CHECK(kill.kernel_order == 4);

  // inconsistent images are rejected: if g -> 1 then g^2 must go to 0
  CHECK_THROWS_AS(hom(c4, c2, {{1, 1}, {2, 1}}), not_homomorphism_error);
  // images must cover the domain
  CHECK_THROWS_AS(hom(d8, c2, {{2, 0}}), precondition_error);
}

TEST_CASE("composition") {
  Group c8 = cyclic(8);
  Group c4 = cyclic(4);
  Group c2 = cyclic(2);
  Homomorphism f = hom(c8, c4, {{1, 1}});
  Homomorphism g = hom(c4, c2, {{1, 1}});
  Homomorphism gf = compose(g, f);
  CHECK(gf.verified);
  CHECK(gf.surjective);
  CHECK(gf.kernel_order == 4);
}

TEST_CASE("quotients") {
  Group c4 = cyclic(4);
  auto [q, proj] = quotient(c4, generated_subgroup(c4, {2}));
  CHECK(q.order() == 2);
  CHECK(proj.surjective);
  CHECK(proj.kernel_order == 2);

  auto [whole, wproj] = quotient(c4, trivial_subgroup(c4));
  CHECK(whole.order() == 4);
  CHECK(wproj.injective());

  auto [one, oproj] = quotient(c4, whole_subgroup(c4));
  CHECK(one.order() == 1);

  Group d8 = dihedral(8);
  CHECK_THROWS_AS(quotient(d8, generated_subgroup(d8, {1})), not_normal_error);
}

TEST_CASE("subgroups as standalone groups") {
  Group d8 = dihedral(8);
  Subgroup rotations = generated_subgroup(d8, {2});
  EmbeddedGroup rot = as_group(rotations);
  CHECK(rot.group.order() == 4);
  CHECK(rot.embed.verified);
  CHECK(rot.embed.injective());
  // the embedding lands inside the subgroup's member set
  for (ElementId x = 0; x < 4; ++x)
    CHECK(rotations.contains(rot.embed(x)));
  // labels carry over from the parent
  CHECK(rot.group.label(0) == d8.label(rotations.members[0]));
}
