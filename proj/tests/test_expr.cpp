#include <catch_amalgamated.hpp>

#include "sgl/expr.hpp"
#include "sgl/oracle.hpp"

using namespace sgl;

TEST_CASE("parsing") {
  ExprPtr e = parse_group_expr("C4");
  CHECK(e->kind == GroupExpr::Kind::cyclic);
  CHECK(e->n == 4);

  // precedence: wr binds tighter than x
  ExprPtr p = parse_group_expr("C2 wr C2 x C2");
  REQUIRE(p->kind == GroupExpr::Kind::direct);
  CHECK(p->left->kind == GroupExpr::Kind::wreath);
  CHECK(p->right->kind == GroupExpr::Kind::cyclic);

  ExprPtr s = parse_group_expr("C4 : C2 [inv]");
  REQUIRE(s->kind == GroupExpr::Kind::semidirect);
  CHECK(s->name == "inv");
  CHECK(s->left->n == 4);
  CHECK(s->right->n == 2);

  // x is left-associative, wr is right-associative
  ExprPtr x3 = parse_group_expr("C2 x C2 x C2");
  CHECK(x3->left->kind == GroupExpr::Kind::direct);
  ExprPtr w3 = parse_group_expr("C2 wr C2 wr C2");
  CHECK(w3->right->kind == GroupExpr::Kind::wreath);

  ExprPtr q = parse_group_expr("Q8/<a^2>");
  REQUIRE(q->kind == GroupExpr::Kind::quotient);
  CHECK(q->words == std::vector<std::string>{"a^2"});

  ExprPtr paren = parse_group_expr("(C2 x C2) wr C2");
  CHECK(paren->kind == GroupExpr::Kind::wreath);
}

TEST_CASE("parse errors carry position and expectation") {
  try {
    parse_group_expr("C4 : C2");
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(e.line == 1);
    CHECK(e.col == 8);
    CHECK(e.expected == "'['");
  }
  CHECK_THROWS_AS(parse_group_expr(""), parse_error);
  CHECK_THROWS_AS(parse_group_expr("C2 x"), parse_error);
  CHECK_THROWS_AS(parse_group_expr("(C2"), parse_error);
  CHECK_THROWS_AS(parse_group_expr("C2 C2"), parse_error);
}

TEST_CASE("round trips") {
  for (const std::string& src :
       {"C4", "C2 x C2", "C2 wr C2 x C2", "C4 : C2 [inv]", "Q8/<a^2>",
        "(C2 wr C2) wr C2", "C2 wr (C2 x C2)", "C2 x (C2 x C2)",
        "C9 : C3 [perm:(1 4 7)(2 8 5)]"}) {
    std::string printed = to_string(*parse_group_expr(src));
    CHECK(to_string(*parse_group_expr(printed)) == printed);
    Group a = eval_expr_text(src);
    Group b = eval_expr_text(printed);
    CHECK(oracle::fingerprint(a) == oracle::fingerprint(b));
  }
}

TEST_CASE("evaluation") {
  CHECK(eval_expr_text("C2 x C2").order() == 4);
  Group q8 = eval_expr_text("Q8");
  CHECK(q8.order() == 8);
  std::uint64_t quads = 0;
  for (ElementId x = 0; x < 8; ++x)
    if (q8.element_order(x) == 4) ++quads;
  CHECK(quads == 6);

  Group d8 = eval_expr_text("C4 : C2 [inv]");
  CHECK(oracle::fingerprint(d8) == oracle::fingerprint(eval_expr_text("D8")));

  // Q8 modulo its center is the Klein group
  Group v = eval_expr_text("Q8/<a^2>");
  CHECK(v.order() == 4);
  CHECK(v.is_abelian());
  for (ElementId x = 1; x < 4; ++x) CHECK(v.element_order(x) == 2);

  // the quotient word must name an element
  CHECK_THROWS_AS(eval_expr_text("Q8/<z>"), domain_error);
  CHECK_THROWS_AS(eval_expr_text("C4 : C2 [zap]"), invalid_action_error);
  CHECK_THROWS_AS(eval_expr_text("Zork"), domain_error);
  CHECK_THROWS_AS(eval_expr_text("C0"), invalid_order_error);

  // explicit permutation actions: C9 : C3 by g -> g^4
  Group g27 = eval_expr_text("C9 : C3 [perm:(1 4 7)(2 8 5)]");
  CHECK(g27.order() == 27);
  CHECK_FALSE(g27.is_abelian());
}

TEST_CASE("catalog entries all evaluate") {
  REQUIRE(catalog_entries().size() >= 40);
  std::set<std::uint64_t> orders;
  for (const std::string& entry : catalog_entries()) {
    Group g = eval_expr_text(entry);
    CHECK(g.prime().has_value());
    orders.insert(g.order());
  }
  for (std::uint64_t n : {2, 4, 8, 16, 32, 3, 9, 27}) CHECK(orders.count(n) == 1);
}
