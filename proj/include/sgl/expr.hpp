#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sgl/catalog.hpp"
#include "sgl/frattini.hpp"
#include "sgl/group.hpp"
#include "sgl/hom.hpp"
#include "sgl/subgroup.hpp"

namespace sgl {

struct GroupExpr;
using ExprPtr = std::shared_ptr<const GroupExpr>;

// Grammar (precedence wr > : > x, "x" left-assoc, "wr" right-assoc):
//   expr   := term { "x" term }
//   term   := factor [ ":" factor "[" action "]" ]
//   factor := atom { "wr" atom }
//   atom   := "C" integer | name | "(" expr ")" | atom "/" "<" word {"," word} ">"
struct GroupExpr {
  enum class Kind { cyclic, abelian, direct, semidirect, wreath, quotient, named };
  Kind kind;
  std::uint64_t n = 0;                 // cyclic
  std::vector<std::uint64_t> orders;   // abelian
  ExprPtr left, right;
  std::string name;                    // named group or action name
  std::vector<std::string> words;      // quotient generator designators
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string text) : text_(std::move(text)) {}

  ExprPtr parse() {
    ExprPtr e = parse_expr();
    skip_ws();
    if (pos_ < text_.size()) fail("end of input");
    return e;
  }

 private:
  std::string text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& expected) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') { ++line; col = 1; } else ++col;
    }
    throw parse_error("unexpected " +
                          (pos_ < text_.size()
                               ? "'" + std::string(1, text_[pos_]) + "'"
                               : std::string("end of input")),
                      line, col, expected);
  }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                   text_[pos_] == '\n' || text_[pos_] == '\r'))
      ++pos_;
  }

  bool at_word(const std::string& w) {
    skip_ws();
    if (text_.compare(pos_, w.size(), w) != 0) return false;
    std::size_t end = pos_ + w.size();
    if (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) ||
                               text_[end] == '_'))
      return false;
    return true;
  }

  bool eat_word(const std::string& w) {
    if (!at_word(w)) return false;
    pos_ += w.size();
    return true;
  }

  bool eat_char(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) { ++pos_; return true; }
    return false;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) fail("group name");
    return text_.substr(start, pos_ - start);
  }

  // Raw scan up to the closing delimiter, honoring nested parentheses so
  // labels like "(0,1,2)" survive inside quotient word lists.
  std::string scan_until(const std::string& stops) {
    std::size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '(') ++depth;
      else if (c == ')' && depth > 0) --depth;
      else if (depth == 0 && stops.find(c) != std::string::npos) break;
      ++pos_;
    }
    std::size_t end = pos_;
    while (start < end && std::isspace(static_cast<unsigned char>(text_[start]))) ++start;
    while (end > start && std::isspace(static_cast<unsigned char>(text_[end - 1]))) --end;
    return text_.substr(start, end - start);
  }

  ExprPtr parse_expr() {
    ExprPtr e = parse_term();
    while (eat_word("x")) {
      auto node = std::make_shared<GroupExpr>();
      node->kind = GroupExpr::Kind::direct;
      node->left = e;
      node->right = parse_term();
      e = node;
    }
    return e;
  }

  ExprPtr parse_term() {
    ExprPtr e = parse_factor();
    if (eat_char(':')) {
      auto node = std::make_shared<GroupExpr>();
      node->kind = GroupExpr::Kind::semidirect;
      node->left = e;
      node->right = parse_factor();
      if (!eat_char('[')) fail("'['");
      skip_ws();
      node->name = scan_until("]");
      if (!eat_char(']')) fail("']'");
      if (node->name.empty()) fail("action name");
      e = node;
    }
    return e;
  }

  ExprPtr parse_factor() {
    ExprPtr e = parse_atom();
    if (at_word("wr")) {
      eat_word("wr");
      auto node = std::make_shared<GroupExpr>();
      node->kind = GroupExpr::Kind::wreath;
      node->left = e;
      node->right = parse_factor();  // right-associative
      e = node;
    }
    return e;
  }

  ExprPtr parse_atom() {
    skip_ws();
    ExprPtr e;
    if (eat_char('(')) {
      e = parse_expr();
      if (!eat_char(')')) fail("')'");
    } else {
      std::string id = ident();
      auto node = std::make_shared<GroupExpr>();
      if (id.size() > 1 && id[0] == 'C' &&
          id.find_first_not_of("0123456789", 1) == std::string::npos) {
        node->kind = GroupExpr::Kind::cyclic;
        node->n = std::stoull(id.substr(1));
      } else {
        node->kind = GroupExpr::Kind::named;
        node->name = id;
      }
      e = node;
    }
    while (eat_char('/')) {
      if (!eat_char('<')) fail("'<'");
      auto node = std::make_shared<GroupExpr>();
      node->kind = GroupExpr::Kind::quotient;
      node->left = e;
      do {
        std::string w = scan_until(",>");
        if (w.empty()) fail("element designator");
        node->words.push_back(std::move(w));
      } while (eat_char(','));
      if (!eat_char('>')) fail("'>'");
      e = node;
    }
    return e;
  }
};

inline int precedence_of(GroupExpr::Kind k) {
  switch (k) {
    case GroupExpr::Kind::direct: return 0;
    case GroupExpr::Kind::semidirect: return 1;
    case GroupExpr::Kind::wreath: return 2;
    default: return 3;
  }
}

}  // namespace detail

inline ExprPtr parse_group_expr(const std::string& text) {
  return detail::ExprParser(text).parse();
}

inline std::string to_string(const GroupExpr& e) {
  auto child = [](const ExprPtr& c, int min_prec) {
    std::string s = to_string(*c);
    if (detail::precedence_of(c->kind) < min_prec) return "(" + s + ")";
    return s;
  };
  switch (e.kind) {
    case GroupExpr::Kind::cyclic:
      return "C" + std::to_string(e.n);
    case GroupExpr::Kind::named:
      return e.name;
    case GroupExpr::Kind::abelian: {
      std::string s;
      for (std::size_t i = 0; i < e.orders.size(); ++i) {
        if (i) s += " x ";
        s += "C" + std::to_string(e.orders[i]);
      }
      return s;
    }
    case GroupExpr::Kind::direct:
      // left-associative: the right operand needs parens when it is itself "x"
      return child(e.left, 0) + " x " +
             child(e.right, e.right->kind == GroupExpr::Kind::direct ? 1 : 0);
    case GroupExpr::Kind::semidirect:
      return child(e.left, 2) + " : " + child(e.right, 2) + " [" + e.name + "]";
    case GroupExpr::Kind::wreath:
      // right-associative: the left operand needs parens when it is "wr"
      return child(e.left, e.left->kind == GroupExpr::Kind::wreath ? 3 : 2) +
             " wr " + child(e.right, 2);
    case GroupExpr::Kind::quotient: {
      std::string s = child(e.left, 3) + "/<";
      for (std::size_t i = 0; i < e.words.size(); ++i) {
        if (i) s += ",";
        s += e.words[i];
      }
      return s + ">";
    }
  }
  return "";
}

// Parses "perm:(0 1 2)(3 4)"-style cycle notation into a permutation of
// 0..n-1 (unmentioned points are fixed).
inline std::vector<ElementId> parse_cycles(const std::string& text,
                                           std::uint64_t n) {
  std::vector<ElementId> perm(n);
  for (std::uint64_t i = 0; i < n; ++i) perm[i] = i;
  std::vector<bool> seen(n, false);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw invalid_action_error("bad cycle notation '" + text + "'");
    ++pos;
    std::vector<std::uint64_t> cycle;
    skip();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw invalid_action_error("bad cycle notation '" + text + "'");
      std::uint64_t v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + (text[pos++] - '0');
      if (v >= n || seen[v])
        throw invalid_action_error("cycle point " + std::to_string(v) +
                                   " out of range or repeated");
      seen[v] = true;
      cycle.push_back(v);
      skip();
      if (pos < text.size() && text[pos] == ',') { ++pos; skip(); }
    }
    if (pos >= text.size())
      throw invalid_action_error("unterminated cycle in '" + text + "'");
    ++pos;  // ')'
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i)
      perm[cycle[i]] = cycle[i + 1];
    if (!cycle.empty()) perm[cycle.back()] = cycle.front();
    skip();
  }
  return perm;
}

inline Action resolve_action(const std::string& name, const Group& base,
                             const Group& top) {
  if (name == "triv") return trivial_action(base, top);
  if (name == "inv") return inversion_action(base, top);
  if (name.rfind("perm:", 0) == 0)
    return cyclic_action(base, top, parse_cycles(name.substr(5), base.order()));
  throw invalid_action_error("unknown action '" + name + "'");
}

inline Group eval_expr(const GroupExpr& e, const Limits& lim = {}) {
  switch (e.kind) {
    case GroupExpr::Kind::cyclic:
      return cyclic(e.n, lim);
    case GroupExpr::Kind::abelian:
      return abelian(e.orders, lim);
    case GroupExpr::Kind::named:
      return named_group(e.name, lim);
    case GroupExpr::Kind::direct:
      return direct_product(eval_expr(*e.left, lim), eval_expr(*e.right, lim), lim);
    case GroupExpr::Kind::wreath:
      return wreath_product(eval_expr(*e.left, lim), eval_expr(*e.right, lim), lim);
    case GroupExpr::Kind::semidirect: {
      Group base = eval_expr(*e.left, lim);
      Group top = eval_expr(*e.right, lim);
      return semidirect_product(base, top, resolve_action(e.name, base, top), lim);
    }
    case GroupExpr::Kind::quotient: {
      Group g = eval_expr(*e.left, lim);
      if (g.order() > lim.table_bound)
        throw capacity_error("quotient needs a materialized group", g.order());
      std::vector<ElementId> gens;
      for (const auto& w : e.words) {
        bool found = false;
        for (ElementId x = 0; x < g.order(); ++x)
          if (g.label(x) == w) { gens.push_back(x); found = true; break; }
        if (!found)
          throw domain_error("no element labeled '" + w + "' in " +
                             to_string(*e.left));
      }
      auto [members, witness] = detail::normal_closure(g, gens);
      Subgroup n = subgroup_from_members(g, std::move(members));
      n.generators = std::move(witness);
      return quotient(g, n, lim).first;
    }
  }
  throw domain_error("corrupt expression tree");
}

inline Group eval_expr_text(const std::string& text, const Limits& lim = {}) {
  return eval_expr(*parse_group_expr(text), lim);
}

// The built-in census: p-group expressions covering every order in
// {2,4,8,16,32} and {3,9,27}. Entries may repeat isomorphism types when
// they exercise different constructions.
inline const std::vector<std::string>& catalog_entries() {
  static const std::vector<std::string> entries = {
      // order 2, 4
      "C2",
      "C4",
      "C2 x C2",
      // order 8
      "C8",
      "C4 x C2",
      "C2 x C2 x C2",
      "D8",
      "Q8",
      "C2 wr C2",
      // order 16
      "C16",
      "C8 x C2",
      "C4 x C4",
      "C4 x C2 x C2",
      "C2 x C2 x C2 x C2",
      "D16",
      "Q16",
      "SD16",
      "M16",
      "D8 x C2",
      "Q8 x C2",
      "C4 : C4 [inv]",
      // order 32
      "C32",
      "C16 x C2",
      "C8 x C4",
      "C8 x C2 x C2",
      "C4 x C4 x C2",
      "C2 x C2 x C2 x C2 x C2",
      "D32",
      "Q32",
      "SD32",
      "M32",
      "D16 x C2",
      "Q16 x C2",
      "D8 x C4",
      "Q8 x C4",
      "C4 wr C2",
      "C8 : C4 [inv]",
      // order 3, 9
      "C3",
      "C9",
      "C3 x C3",
      // order 27
      "C27",
      "C9 x C3",
      "C3 x C3 x C3",
      "Heis3",
      "C9 : C3 [perm:(1 4 7)(2 8 5)]",
  };
  return entries;
}

}  // namespace sgl
