#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sgl/errors.hpp"
#include "sgl/limits.hpp"

namespace sgl {

// Element of one Group instance: dense index in [0, |G|), identity at 0.
using ElementId = std::uint64_t;

namespace detail {

inline std::optional<std::uint64_t> prime_power_base(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (p * p > n) p = n;
  std::uint64_t m = n;
  while (m % p == 0) m /= p;
  if (m != 1) return std::nullopt;
  return p;
}

// |A|^|H| * |H| with overflow detection.
inline bool checked_wreath_order(std::uint64_t a, std::uint64_t h,
                                 std::uint64_t* out) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < h; ++i)
    if (__builtin_mul_overflow(r, a, &r)) return false;
  return !__builtin_mul_overflow(r, h, out);
}

}  // namespace detail

class GroupImpl {
 public:
  virtual ~GroupImpl() = default;
  virtual std::uint64_t order() const noexcept = 0;
  virtual ElementId mul(ElementId x, ElementId y) const = 0;
  virtual ElementId inverse(ElementId x) const = 0;
  virtual std::string label(ElementId x) const = 0;
  // A small generating set, deterministic, never containing the identity.
  virtual std::vector<ElementId> generators() const = 0;
  virtual bool has_table() const noexcept { return false; }

  std::optional<std::uint64_t> prime;  // set when order is a prime power
};

// Immutable, shared finite group. Safe for concurrent reads.
class Group {
 public:
  Group() = default;
  explicit Group(std::shared_ptr<const GroupImpl> impl)
      : impl_(std::move(impl)) {}

  std::uint64_t order() const { return impl_->order(); }
  ElementId identity() const { return 0; }
  ElementId mul(ElementId x, ElementId y) const { return impl_->mul(x, y); }
  ElementId inverse(ElementId x) const { return impl_->inverse(x); }
  std::string label(ElementId x) const { return impl_->label(x); }
  std::vector<ElementId> generators() const { return impl_->generators(); }
  std::optional<std::uint64_t> prime() const { return impl_->prime; }
  bool has_table() const { return impl_->has_table(); }
  bool valid() const { return impl_ != nullptr; }

  ElementId conj(ElementId g, ElementId x) const {
    return mul(mul(g, x), inverse(g));
  }
  ElementId commutator(ElementId x, ElementId y) const {
    return mul(mul(x, y), mul(inverse(x), inverse(y)));
  }

  ElementId power(ElementId x, std::uint64_t k) const {
    ElementId r = 0, b = x;
    while (k > 0) {
      if (k & 1) r = mul(r, b);
      b = mul(b, b);
      k >>= 1;
    }
    return r;
  }

  std::uint64_t element_order(ElementId x) const {
    std::uint64_t n = 1;
    ElementId y = x;
    while (y != 0) {
      y = mul(y, x);
      ++n;
    }
    return n;
  }

  // True when every pair of generators commutes (hence the group is abelian).
  bool is_abelian() const {
    auto gens = generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j)
        if (mul(gens[i], gens[j]) != mul(gens[j], gens[i])) return false;
    return true;
  }

  const GroupImpl* impl() const { return impl_.get(); }
  std::shared_ptr<const GroupImpl> impl_ptr() const { return impl_; }

 private:
  std::shared_ptr<const GroupImpl> impl_;
};

namespace detail {

class CayleyGroup final : public GroupImpl {
 public:
  CayleyGroup(std::uint64_t n, std::vector<std::uint32_t> table,
              std::vector<std::string> labels,
              std::vector<ElementId> gens = {})
      : n_(n),
        table_(std::move(table)),
        labels_(std::move(labels)),
        gens_(std::move(gens)) {
    inv_.assign(n_, 0);
    for (std::uint64_t x = 0; x < n_; ++x) {
      bool found = false;
      for (std::uint64_t y = 0; y < n_; ++y)
        if (at(x, y) == 0 && at(y, x) == 0) {
          inv_[x] = y;
          found = true;
          break;
        }
      if (!found) throw error("element without a two-sided inverse");
      if (at(0, x) != x || at(x, 0) != x)
        throw error("index 0 is not a two-sided identity");
    }
    if (gens_.empty()) gens_ = greedy_generators();
  }

  std::uint64_t order() const noexcept override { return n_; }
  ElementId mul(ElementId x, ElementId y) const override { return at(x, y); }
  ElementId inverse(ElementId x) const override { return inv_[x]; }
  std::string label(ElementId x) const override { return labels_[x]; }
  std::vector<ElementId> generators() const override { return gens_; }
  bool has_table() const noexcept override { return true; }

 private:
  ElementId at(ElementId x, ElementId y) const { return table_[x * n_ + y]; }

  std::vector<ElementId> greedy_generators() const {
    std::vector<ElementId> gens;
    std::vector<bool> in(n_, false);
    in[0] = true;
    std::uint64_t count = 1;
    for (ElementId x = 1; x < n_ && count < n_; ++x) {
      if (in[x]) continue;
      gens.push_back(x);
      // close under right multiplication by the chosen generators
      std::vector<ElementId> work{0};
      std::vector<bool> seen(n_, false);
      seen[0] = true;
      std::vector<ElementId> members{0};
      while (!work.empty()) {
        ElementId v = work.back();
        work.pop_back();
        for (ElementId g : gens) {
          ElementId w = at(v, g);
          if (!seen[w]) {
            seen[w] = true;
            work.push_back(w);
            members.push_back(w);
          }
        }
      }
      count = members.size();
      in = seen;
    }
    return gens;
  }

  std::uint64_t n_;
  std::vector<std::uint32_t> table_;
  std::vector<std::string> labels_;
  std::vector<ElementId> inv_;
  std::vector<ElementId> gens_;
};

class CyclicGroup final : public GroupImpl {
 public:
  explicit CyclicGroup(std::uint64_t n) : n_(n) {}
  std::uint64_t order() const noexcept override { return n_; }
  ElementId mul(ElementId x, ElementId y) const override {
    return (x + y) % n_;
  }
  ElementId inverse(ElementId x) const override { return (n_ - x) % n_; }
  std::string label(ElementId x) const override {
    return "g^" + std::to_string(x);
  }
  std::vector<ElementId> generators() const override {
    return n_ > 1 ? std::vector<ElementId>{1} : std::vector<ElementId>{};
  }

 private:
  std::uint64_t n_;
};

class DirectGroup final : public GroupImpl {
 public:
  DirectGroup(Group g, Group h) : g_(std::move(g)), h_(std::move(h)) {
    nh_ = h_.order();
    n_ = g_.order() * nh_;
  }
  std::uint64_t order() const noexcept override { return n_; }
  ElementId mul(ElementId x, ElementId y) const override {
    return g_.mul(x / nh_, y / nh_) * nh_ + h_.mul(x % nh_, y % nh_);
  }
  ElementId inverse(ElementId x) const override {
    return g_.inverse(x / nh_) * nh_ + h_.inverse(x % nh_);
  }
  std::string label(ElementId x) const override {
    return "(" + g_.label(x / nh_) + ", " + h_.label(x % nh_) + ")";
  }
  std::vector<ElementId> generators() const override {
    std::vector<ElementId> gens;
    for (ElementId a : g_.generators()) gens.push_back(a * nh_);
    for (ElementId b : h_.generators()) gens.push_back(b);
    return gens;
  }

 private:
  Group g_, h_;
  std::uint64_t nh_, n_;
};

}  // namespace detail

// Automorphic action of a top group on a base group, given as explicit
// permutation tables. Validated eagerly by semidirect_product.
struct Action {
  Group top;
  Group base;
  // auto_table[h][a] = image of base element a under the automorphism of h
  std::vector<std::vector<ElementId>> auto_table;

  void validate() const {
    const std::uint64_t nh = top.order(), na = base.order();
    if (auto_table.size() != nh)
      throw invalid_action_error("action table has wrong top-group size");
    for (std::uint64_t h = 0; h < nh; ++h) {
      const auto& perm = auto_table[h];
      if (perm.size() != na)
        throw invalid_action_error("action permutation has wrong size");
      std::vector<bool> hit(na, false);
      for (ElementId img : perm) {
        if (img >= na || hit[img])
          throw invalid_action_error("action entry is not a permutation");
        hit[img] = true;
      }
      for (std::uint64_t a = 0; a < na; ++a)
        for (std::uint64_t b = 0; b < na; ++b)
          if (perm[base.mul(a, b)] != base.mul(perm[a], perm[b]))
            throw invalid_action_error(
                "action permutation is not an automorphism");
    }
    for (std::uint64_t a = 0; a < na; ++a)
      if (auto_table[0][a] != a)
        throw invalid_action_error("identity must act trivially");
    for (std::uint64_t h1 = 0; h1 < nh; ++h1)
      for (std::uint64_t h2 = 0; h2 < nh; ++h2) {
        const auto& composed = auto_table[top.mul(h1, h2)];
        for (std::uint64_t a = 0; a < na; ++a)
          if (composed[a] != auto_table[h1][auto_table[h2][a]])
            throw invalid_action_error(
                "action is not a homomorphism into Aut(base)");
      }
  }
};

namespace detail {

class SemidirectGroup final : public GroupImpl {
 public:
  SemidirectGroup(Group a, Group h, Action act)
      : a_(std::move(a)), h_(std::move(h)), act_(std::move(act)) {
    nh_ = h_.order();
    n_ = a_.order() * nh_;
  }
  std::uint64_t order() const noexcept override { return n_; }
  // (a1,h1)(a2,h2) = (a1 * act(h1)(a2), h1 h2)
  ElementId mul(ElementId x, ElementId y) const override {
    ElementId a1 = x / nh_, h1 = x % nh_, a2 = y / nh_, h2 = y % nh_;
    return a_.mul(a1, act_.auto_table[h1][a2]) * nh_ + h_.mul(h1, h2);
  }
  ElementId inverse(ElementId x) const override {
    ElementId a = x / nh_, h = x % nh_;
    ElementId hi = h_.inverse(h);
    return act_.auto_table[hi][a_.inverse(a)] * nh_ + hi;
  }
  std::string label(ElementId x) const override {
    return "(" + a_.label(x / nh_) + ", " + h_.label(x % nh_) + ")";
  }
  std::vector<ElementId> generators() const override {
    std::vector<ElementId> gens;
    for (ElementId a : a_.generators()) gens.push_back(a * nh_);
    for (ElementId h : h_.generators()) gens.push_back(h);
    return gens;
  }

 private:
  Group a_, h_;
  Action act_;
  std::uint64_t nh_, n_;
};

// Regular wreath product A wr T: pairs (f, t) with f: T -> A, multiplied by
// (f1,t1)(f2,t2) = (f1 * f2^{t1^{-1}}, t1 t2) where f2^{t1^{-1}}(s) = f2(s t1).
// Element encoding: id = (sum_i f(i) |A|^i) * |T| + t, so the identity is 0.
class WreathGroup final : public GroupImpl {
 public:
  WreathGroup(Group base, Group top, std::uint64_t n)
      : base_(std::move(base)), top_(std::move(top)), n_(n) {
    na_ = base_.order();
    nt_ = top_.order();
  }

  std::uint64_t order() const noexcept override { return n_; }

  ElementId mul(ElementId x, ElementId y) const override {
    ElementId t1 = x % nt_, t2 = y % nt_;
    ElementId fx = x / nt_, fy = y / nt_;
    std::vector<ElementId> f2(nt_);
    for (std::uint64_t i = 0; i < nt_; ++i) {
      f2[i] = fy % na_;
      fy /= na_;
    }
    ElementId rf = 0, w = 1;
    for (std::uint64_t i = 0; i < nt_; ++i) {
      ElementId c = base_.mul(fx % na_, f2[top_.mul(i, t1)]);
      fx /= na_;
      rf += c * w;
      w *= na_;
    }
    return rf * nt_ + top_.mul(t1, t2);
  }

  // (f,t)^{-1} = (h, t^{-1}) with h(s) = f(s t^{-1})^{-1}
  ElementId inverse(ElementId x) const override {
    ElementId t = x % nt_, fx = x / nt_;
    std::vector<ElementId> f(nt_);
    for (std::uint64_t i = 0; i < nt_; ++i) {
      f[i] = fx % na_;
      fx /= na_;
    }
    ElementId ti = top_.inverse(t);
    ElementId rf = 0, w = 1;
    for (std::uint64_t i = 0; i < nt_; ++i) {
      rf += base_.inverse(f[top_.mul(i, ti)]) * w;
      w *= na_;
    }
    return rf * nt_ + ti;
  }

  std::string label(ElementId x) const override {
    ElementId t = x % nt_, fx = x / nt_;
    std::ostringstream os;
    os << "([";
    for (std::uint64_t i = 0; i < nt_; ++i) {
      if (i) os << ", ";
      os << base_.label(fx % na_);
      fx /= na_;
    }
    os << "], " << top_.label(t) << ")";
    return os.str();
  }

  std::vector<ElementId> generators() const override {
    std::vector<ElementId> gens;
    for (ElementId a : base_.generators()) gens.push_back(a * nt_);
    for (ElementId t : top_.generators()) gens.push_back(t);
    return gens;
  }

  const Group& base() const { return base_; }
  const Group& top() const { return top_; }

  ElementId encode(const std::vector<ElementId>& f, ElementId t) const {
    ElementId rf = 0, w = 1;
    for (std::uint64_t i = 0; i < nt_; ++i) {
      rf += f[i] * w;
      w *= na_;
    }
    return rf * nt_ + t;
  }
  void decode(ElementId x, std::vector<ElementId>* f, ElementId* t) const {
    *t = x % nt_;
    ElementId fx = x / nt_;
    f->resize(nt_);
    for (std::uint64_t i = 0; i < nt_; ++i) {
      (*f)[i] = fx % na_;
      fx /= na_;
    }
  }

 private:
  Group base_, top_;
  std::uint64_t n_, na_, nt_;
};

inline void tag_prime(GroupImpl* impl) {
  impl->prime = prime_power_base(impl->order());
  if (impl->order() == 1) impl->prime = std::nullopt;
}

// Copies an arbitrary impl into a Cayley table, preserving labels, prime tag
// and generating set.
inline Group materialize(std::shared_ptr<GroupImpl> impl,
                         const Limits& lim = {}) {
  tag_prime(impl.get());
  const std::uint64_t n = impl->order();
  if (impl->has_table() || n > lim.table_bound)
    return Group(std::move(impl));
  std::vector<std::uint32_t> table(n * n);
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = 0; y < n; ++y)
      table[x * n + y] = static_cast<std::uint32_t>(impl->mul(x, y));
  std::vector<std::string> labels(n);
  for (std::uint64_t x = 0; x < n; ++x) labels[x] = impl->label(x);
  auto cg = std::make_shared<CayleyGroup>(n, std::move(table),
                                          std::move(labels),
                                          impl->generators());
  cg->prime = impl->prime;
  return Group(cg);
}

}  // namespace detail

// Z/nZ with element i labeled "g^i".
inline Group cyclic(std::uint64_t n, const Limits& lim = {}) {
  if (n == 0) throw invalid_order_error("cyclic group of order 0");
  return detail::materialize(std::make_shared<detail::CyclicGroup>(n), lim);
}

inline Group trivial_group(const Limits& lim = {}) { return cyclic(1, lim); }

inline Group direct_product(const Group& g, const Group& h,
                            const Limits& lim = {}) {
  std::uint64_t n;
  if (__builtin_mul_overflow(g.order(), h.order(), &n) ||
      n > lim.structural_bound)
    throw capacity_error("direct product exceeds the representability bound",
                         0);
  return detail::materialize(std::make_shared<detail::DirectGroup>(g, h), lim);
}

// Direct product of cyclic groups of the given orders; empty list gives the
// trivial group.
inline Group abelian(const std::vector<std::uint64_t>& factors,
                     const Limits& lim = {}) {
  if (factors.empty()) return trivial_group(lim);
  for (std::uint64_t f : factors)
    if (f < 2) throw invalid_order_error("abelian factors must be >= 2");
  Group g = cyclic(factors[0], lim);
  for (std::size_t i = 1; i < factors.size(); ++i)
    g = direct_product(g, cyclic(factors[i], lim), lim);
  return g;
}

inline Group semidirect_product(const Group& a, const Group& h,
                                const Action& act, const Limits& lim = {}) {
  if (act.base.impl() != a.impl() || act.top.impl() != h.impl())
    throw invalid_action_error("action base/top do not match the factors");
  act.validate();
  std::uint64_t n;
  if (__builtin_mul_overflow(a.order(), h.order(), &n) ||
      n > lim.structural_bound)
    throw capacity_error("semidirect product exceeds the representability bound",
                         0);
  return detail::materialize(
      std::make_shared<detail::SemidirectGroup>(a, h, act), lim);
}

inline Action trivial_action(const Group& a, const Group& h) {
  std::vector<ElementId> id(a.order());
  for (std::uint64_t i = 0; i < a.order(); ++i) id[i] = i;
  return Action{h, a, std::vector<std::vector<ElementId>>(h.order(), id)};
}

// Regular wreath product per the pair/multiplication description above.
inline Group wreath_product(const Group& base, const Group& top,
                            const Limits& lim = {}) {
  std::uint64_t n;
  if (!detail::checked_wreath_order(base.order(), top.order(), &n))
    throw capacity_error("wreath product order overflows 64 bits", 0);
  if (n > lim.structural_bound)
    throw capacity_error("wreath product of order " + std::to_string(n) +
                             " exceeds the representability bound",
                         n);
  return detail::materialize(
      std::make_shared<detail::WreathGroup>(base, top, n), lim);
}

// Exhaustive identity/inverse/associativity check when |G|^3 fits in the ops
// budget, seeded sampling otherwise.
inline bool check_group_axioms(const Group& g, std::uint64_t max_ops = 1 << 24,
                               std::uint64_t seed = 1) {
  const std::uint64_t n = g.order();
  for (ElementId x = 0; x < n; ++x) {
    if (g.mul(0, x) != x || g.mul(x, 0) != x) return false;
    ElementId xi = g.inverse(x);
    if (g.mul(x, xi) != 0 || g.mul(xi, x) != 0) return false;
  }
  auto assoc = [&](ElementId x, ElementId y, ElementId z) {
    return g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z));
  };
  if (n * n * n <= max_ops) {
    for (ElementId x = 0; x < n; ++x)
      for (ElementId y = 0; y < n; ++y)
        for (ElementId z = 0; z < n; ++z)
          if (!assoc(x, y, z)) return false;
  } else {
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < max_ops / 4; ++i)
      if (!assoc(rng() % n, rng() % n, rng() % n)) return false;
  }
  return true;
}

}  // namespace sgl
