#include <catch_amalgamated.hpp>

#include "sgl/catalog.hpp"
#include "sgl/subgroup.hpp"

using namespace sgl;

namespace {

// D8 as C4 ⋊ C2: element (r^i, s^j) has id 2i + j
ElementId rot(std::uint64_t i) { return 2 * (i % 4); }
ElementId ref(std::uint64_t i) { return 2 * (i % 4) + 1; }

}  // namespace

TEST_CASE("generated subgroups") {
  Group d8 = dihedral(8);
  CHECK(generated_subgroup(d8, {}).order() == 1);
  CHECK(generated_subgroup(cyclic(4), {2}).order() == 2);

  Subgroup klein = generated_subgroup(d8, {rot(2), ref(0)});
  CHECK(klein.order() == 4);
  CHECK(klein.is_abelian());
  CHECK(klein.contains(rot(2)));
  CHECK(klein.contains(ref(2)));
}

TEST_CASE("subgroup lattice") {
  CHECK(all_subgroups(cyclic(3)).size() == 2);
  CHECK(all_subgroups(abelian({2, 2})).size() == 5);
  CHECK(all_subgroups(dihedral(8)).size() == 10);
  CHECK(all_subgroups(quaternion(8)).size() == 6);
  CHECK(all_subgroups(cyclic(16)).size() == 5);

  // ascending (order, lex member set): trivial first, whole group last
  auto subs = all_subgroups(dihedral(8));
  CHECK(subs.front().is_trivial());
  CHECK(subs.back().is_whole());
  for (std::size_t i = 1; i < subs.size(); ++i)
    CHECK(subs[i - 1].order() <= subs[i].order());

  // every member set is closed and of dividing order
  Group d8 = dihedral(8);
  for (const auto& s : subs) {
    CHECK(8 % s.order() == 0);
    for (ElementId x : s.members)
      for (ElementId y : s.members) CHECK(s.contains(d8.mul(x, y)));
  }
}

TEST_CASE("normality") {
  Group d8 = dihedral(8);
  Subgroup rotations = generated_subgroup(d8, {rot(1)});
  CHECK(is_normal(d8, rotations));
  Subgroup reflection = generated_subgroup(d8, {ref(0)});
  CHECK_FALSE(is_normal(d8, reflection));

  Group q8 = quaternion(8);
  for (const auto& s : all_subgroups(q8)) CHECK(is_normal(q8, s));

  Group klein = abelian({2, 2});
  for (const auto& s : all_subgroups(klein)) CHECK(is_normal(klein, s));
}

TEST_CASE("relative commutators") {
  Group d8 = dihedral(8);
  Subgroup a = generated_subgroup(d8, {rot(1)});
  Subgroup h = generated_subgroup(d8, {ref(0)});
  Subgroup com = relative_commutator(a, h);
  CHECK(com.order() == 2);
  CHECK(com.contains(rot(2)));

  Group q8 = quaternion(8);
  Subgroup i = generated_subgroup(q8, {2});   // a = "a^1"
  Subgroup j = generated_subgroup(q8, {1});   // b = "a^0 b"
  Subgroup c = relative_commutator(i, j);
  CHECK(c.order() == 2);  // the center

  Subgroup trivial_h = trivial_subgroup(d8);
  CHECK(relative_commutator(a, trivial_h).is_trivial());
}

TEST_CASE("agemo") {
  Group klein = abelian({2, 2});
  CHECK(agemo(whole_subgroup(klein), 2).is_trivial());
  CHECK(agemo(whole_subgroup(cyclic(4)), 2).order() == 2);
  CHECK(agemo(whole_subgroup(abelian({8, 2})), 2).order() == 4);
}

TEST_CASE("product sets") {
  Group q8 = quaternion(8);
  Subgroup i = generated_subgroup(q8, {2});
  Subgroup j = generated_subgroup(q8, {1});
  CHECK(product_set(i, j).size() == 8);
  CHECK(product_size(i, j) == 8);
  CHECK(product_set(i, i).size() == 4);

  Group klein = abelian({2, 2});
  Subgroup a = generated_subgroup(klein, {1});
  Subgroup b = generated_subgroup(klein, {2});
  CHECK(product_set(a, b).size() == 4);
}
