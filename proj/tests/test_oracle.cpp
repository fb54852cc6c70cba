#include <catch_amalgamated.hpp>

#include "sgl/catalog.hpp"
#include "sgl/engine.hpp"
#include "sgl/oracle.hpp"

using namespace sgl;

TEST_CASE("naive semiabelian check") {
  CHECK(oracle::semiabelian_naive(trivial_group()));
  CHECK(oracle::semiabelian_naive(cyclic(9)));
  CHECK(oracle::semiabelian_naive(abelian({2, 2})));
  CHECK(oracle::semiabelian_naive(dihedral(8)));
  CHECK(oracle::semiabelian_naive(quaternion(8)));
}

TEST_CASE("engine and oracle agree at small orders") {
  for (Group g : {cyclic(2), cyclic(4), abelian({2, 2}), cyclic(8), dihedral(8),
                  quaternion(8), abelian({4, 2}), cyclic(3), cyclic(9),
                  abelian({3, 3}), heisenberg(3), dihedral(16), quaternion(16),
                  semidihedral(16), modular_group(16)}) {
    CHECK(is_semiabelian(g) == oracle::semiabelian_naive(g));
  }
}

TEST_CASE("brute rank matches frattini rank") {
  CHECK(oracle::brute_rank(trivial_group()) == 0);
  CHECK(oracle::brute_rank(cyclic(9)) == 1);
  CHECK(oracle::brute_rank(dihedral(8)) == 2);
  for (Group g : {cyclic(16), abelian({4, 2}), abelian({2, 2, 2}), dihedral(16),
                  quaternion(16), semidihedral(16), modular_group(16),
                  heisenberg(3), abelian({8, 4})}) {
    CHECK(oracle::brute_rank(g) == rank(g));
  }
}

TEST_CASE("frattini via maximal subgroups") {
  for (Group g : {cyclic(16), abelian({2, 2}), dihedral(8), quaternion(8),
                  dihedral(16), heisenberg(3), abelian({9, 3})}) {
    auto members = oracle::frattini_by_maximal(g);
    Subgroup f = frattini(g);
    CHECK(members == f.members);
  }
}

TEST_CASE("fingerprints") {
  auto fp_w = oracle::fingerprint(wreath_product(cyclic(2), cyclic(2)));
  auto fp_d = oracle::fingerprint(dihedral(8));
  auto fp_q = oracle::fingerprint(quaternion(8));
  CHECK(fp_w == fp_d);
  CHECK_FALSE(fp_d == fp_q);
  CHECK(fp_d.element_order_histogram.at(4) == 2);
  CHECK(fp_q.element_order_histogram.at(4) == 6);
  CHECK(fp_q.center_order == 2);
  CHECK(fp_q.derived_order == 2);
  CHECK_FALSE(fp_q.abelian);

  auto fp_k = oracle::fingerprint(abelian({2, 2}));
  CHECK(fp_k.abelian);
  CHECK(fp_k.center_order == 4);
  CHECK(fp_k.derived_order == 1);
}
