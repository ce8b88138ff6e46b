#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <iterator>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "monadic/error.hpp"

namespace monadic {

enum class Quantifier { Exists, Forall, ExistsInf, ForallInf };

/// M: no equality, no infinity quantifiers. FOE adds equality. FOEI adds
/// the infinity quantifiers and W.
enum class Dialect { M, FOE, FOEI };

inline const char* to_string(Dialect d) {
  switch (d) {
    case Dialect::M: return "m";
    case Dialect::FOE: return "foe";
    case Dialect::FOEI: return "foei";
  }
  return "?";
}

inline Dialect dialect_from_string(const std::string& s) {
  if (s == "m" || s == "M") return Dialect::M;
  if (s == "foe" || s == "FOE") return Dialect::FOE;
  if (s == "foei" || s == "FOEI") return Dialect::FOEI;
  throw InvalidArgument("unknown dialect '" + s + "'");
}

/// Immutable formula in negation normal form. Nodes are shared; copying a
/// Formula is cheap.
class Formula {
 public:
  enum class Kind { Top, Bottom, Lit, Eq, And, Or, Quant, W };

  Formula() : Formula(top()) {}

  static Formula top() { return make(Kind::Top); }
  static Formula bottom() { return make(Kind::Bottom); }

  static Formula lit(std::string pred, std::string var, bool positive = true) {
    auto n = raw(Kind::Lit);
    n->name = std::move(pred);
    n->var = std::move(var);
    n->positive = positive;
    return finish(n);
  }

  /// x = y when `positive`, x != y otherwise.
  static Formula eq(std::string x, std::string y, bool positive = true) {
    auto n = raw(Kind::Eq);
    n->var = std::move(x);
    n->var2 = std::move(y);
    n->positive = positive;
    return finish(n);
  }

  static Formula conj(Formula a, Formula b) {
    return binary(Kind::And, std::move(a), std::move(b));
  }
  static Formula disj(Formula a, Formula b) {
    return binary(Kind::Or, std::move(a), std::move(b));
  }

  static Formula quant(Quantifier q, std::string var, Formula body) {
    auto n = raw(Kind::Quant);
    n->q = q;
    n->var = std::move(var);
    n->a = std::move(body.n_);
    return finish(n);
  }
  static Formula exists(std::string v, Formula b) {
    return quant(Quantifier::Exists, std::move(v), std::move(b));
  }
  static Formula forall(std::string v, Formula b) {
    return quant(Quantifier::Forall, std::move(v), std::move(b));
  }
  static Formula exists_inf(std::string v, Formula b) {
    return quant(Quantifier::ExistsInf, std::move(v), std::move(b));
  }
  static Formula forall_inf(std::string v, Formula b) {
    return quant(Quantifier::ForallInf, std::move(v), std::move(b));
  }

  /// W x.(first, second), an abbreviation for
  /// A x.(first | second) & Ainf x. second.
  static Formula w(std::string var, Formula first, Formula second) {
    auto n = raw(Kind::W);
    n->var = std::move(var);
    n->a = std::move(first.n_);
    n->b = std::move(second.n_);
    return finish(n);
  }

  /// Left-nested conjunction; true conjuncts are dropped, empty gives true.
  static Formula conj_all(const std::vector<Formula>& fs) {
    return fold(fs, Kind::And, Kind::Top);
  }
  /// Left-nested disjunction; false disjuncts are dropped, empty gives false.
  static Formula disj_all(const std::vector<Formula>& fs) {
    return fold(fs, Kind::Or, Kind::Bottom);
  }

  Kind kind() const { return n_->kind; }
  bool is(Kind k) const { return n_->kind == k; }

  /// Predicate name of a literal.
  const std::string& pred() const { return n_->name; }
  /// Variable of a literal, left side of an equation, or bound variable.
  const std::string& var() const { return n_->var; }
  /// Right side of an equation.
  const std::string& var2() const { return n_->var2; }
  bool positive() const { return n_->positive; }
  Quantifier quantifier() const { return n_->q; }

  /// Left child of And/Or, body of a quantifier, first slot of W.
  Formula lhs() const { return Formula(n_->a); }
  /// Right child of And/Or, second slot of W.
  Formula rhs() const { return Formula(n_->b); }
  Formula body() const { return Formula(n_->a); }

  std::size_t rank() const { return n_->rank; }
  std::size_t size() const { return n_->size; }
  /// Sorted, duplicate-free.
  const std::vector<std::string>& free_vars() const { return n_->free; }
  bool is_sentence() const { return n_->free.empty(); }
  std::size_t hash() const { return n_->hash; }

  /// Identity of the shared node; equal ids imply equal formulas.
  const void* id() const { return n_.get(); }

  friend bool operator==(const Formula& x, const Formula& y) {
    return equal(*x.n_, *y.n_);
  }
  friend bool operator!=(const Formula& x, const Formula& y) {
    return !(x == y);
  }

 private:
  struct Node {
    Kind kind = Kind::Top;
    std::string name, var, var2;
    bool positive = true;
    Quantifier q = Quantifier::Exists;
    std::shared_ptr<const Node> a, b;
    std::size_t rank = 0, size = 1, hash = 0;
    std::vector<std::string> free;
  };

  explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}

  static std::shared_ptr<Node> raw(Kind k) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    return n;
  }
  static Formula make(Kind k) { return finish(raw(k)); }

  static Formula binary(Kind k, Formula a, Formula b) {
    auto n = raw(k);
    n->a = std::move(a.n_);
    n->b = std::move(b.n_);
    return finish(n);
  }

  static Formula fold(const std::vector<Formula>& fs, Kind op, Kind unit) {
    std::optional<Formula> acc;
    for (const auto& f : fs) {
      if (f.kind() == unit) continue;
      acc = acc ? binary(op, *acc, f) : f;
    }
    return acc ? *acc : make(unit);
  }

  static void merge_into(std::vector<std::string>& out,
                         const std::vector<std::string>& in) {
    std::vector<std::string> tmp;
    std::set_union(out.begin(), out.end(), in.begin(), in.end(),
                   std::back_inserter(tmp));
    out = std::move(tmp);
  }

  static void erase_var(std::vector<std::string>& v, const std::string& x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it != v.end() && *it == x) v.erase(it);
  }

  static std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }

  static Formula finish(std::shared_ptr<Node> n) {
    std::hash<std::string> hs;
    std::size_t h = mix(static_cast<std::size_t>(n->kind), n->positive);
    switch (n->kind) {
      case Kind::Top:
      case Kind::Bottom:
        break;
      case Kind::Lit:
        n->free = {n->var};
        h = mix(mix(h, hs(n->name)), hs(n->var));
        break;
      case Kind::Eq:
        n->free = {n->var, n->var2};
        std::sort(n->free.begin(), n->free.end());
        n->free.erase(std::unique(n->free.begin(), n->free.end()),
                      n->free.end());
        h = mix(mix(h, hs(n->var)), hs(n->var2));
        break;
      case Kind::And:
      case Kind::Or:
        n->free = n->a->free;
        merge_into(n->free, n->b->free);
        n->rank = std::max(n->a->rank, n->b->rank);
        n->size = 1 + n->a->size + n->b->size;
        h = mix(mix(h, n->a->hash), n->b->hash);
        break;
      case Kind::Quant:
        n->free = n->a->free;
        erase_var(n->free, n->var);
        n->rank = 1 + n->a->rank;
        n->size = 1 + n->a->size;
        h = mix(mix(mix(h, static_cast<std::size_t>(n->q)), hs(n->var)),
                n->a->hash);
        break;
      case Kind::W:
        n->free = n->a->free;
        merge_into(n->free, n->b->free);
        erase_var(n->free, n->var);
        n->rank = 1 + std::max(n->a->rank, n->b->rank);
        n->size = 1 + n->a->size + n->b->size;
        h = mix(mix(mix(h, hs(n->var)), n->a->hash), n->b->hash);
        break;
    }
    n->hash = h;
    return Formula(std::shared_ptr<const Node>(std::move(n)));
  }

  static bool equal(const Node& x, const Node& y) {
    if (&x == &y) return true;
    if (x.kind != y.kind || x.hash != y.hash) return false;
    switch (x.kind) {
      case Kind::Top:
      case Kind::Bottom:
        return true;
      case Kind::Lit:
        return x.positive == y.positive && x.name == y.name && x.var == y.var;
      case Kind::Eq:
        return x.positive == y.positive && x.var == y.var && x.var2 == y.var2;
      case Kind::And:
      case Kind::Or:
        return equal(*x.a, *y.a) && equal(*x.b, *y.b);
      case Kind::Quant:
        return x.q == y.q && x.var == y.var && equal(*x.a, *y.a);
      case Kind::W:
        return x.var == y.var && equal(*x.a, *y.a) && equal(*x.b, *y.b);
    }
    return false;
  }

  std::shared_ptr<const Node> n_;
};

/// Quantifier rank: quantifiers add one; W counts as one quantifier over both
/// slots.
inline std::size_t qrank(const Formula& f) { return f.rank(); }

inline const std::vector<std::string>& free_vars(const Formula& f) {
  return f.free_vars();
}

}  // namespace monadic

template <>
struct std::hash<monadic::Formula> {
  std::size_t operator()(const monadic::Formula& f) const { return f.hash(); }
};
