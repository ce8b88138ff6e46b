#pragma once

#include <set>
#include <string>

#include "monadic/formula.hpp"
#include "monadic/pred_set.hpp"

namespace monadic {

/// Replaces every W x.(a, b) by A x.(a | b) & Ainf x. b.
inline Formula elaborate_w(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::And:
      return Formula::conj(elaborate_w(f.lhs()), elaborate_w(f.rhs()));
    case K::Or:
      return Formula::disj(elaborate_w(f.lhs()), elaborate_w(f.rhs()));
    case K::Quant:
      return Formula::quant(f.quantifier(), f.var(), elaborate_w(f.body()));
    case K::W: {
      Formula a = elaborate_w(f.lhs());
      Formula b = elaborate_w(f.rhs());
      return Formula::conj(Formula::forall(f.var(), Formula::disj(a, b)),
                           Formula::forall_inf(f.var(), b));
    }
    default:
      return f;
  }
}

namespace detail {

inline Quantifier flip(Quantifier q) {
  switch (q) {
    case Quantifier::Exists: return Quantifier::Forall;
    case Quantifier::Forall: return Quantifier::Exists;
    case Quantifier::ExistsInf: return Quantifier::ForallInf;
    case Quantifier::ForallInf: return Quantifier::ExistsInf;
  }
  return q;
}

// Swaps connectives, quantifiers, constants and equality polarity; flips
// literal polarity only when `negate_literals` is set. Input is W-free.
inline Formula swap_connectives(const Formula& f, bool negate_literals) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Top: return Formula::bottom();
    case K::Bottom: return Formula::top();
    case K::Lit:
      return negate_literals ? Formula::lit(f.pred(), f.var(), !f.positive())
                             : f;
    case K::Eq: return Formula::eq(f.var(), f.var2(), !f.positive());
    case K::And:
      return Formula::disj(swap_connectives(f.lhs(), negate_literals),
                           swap_connectives(f.rhs(), negate_literals));
    case K::Or:
      return Formula::conj(swap_connectives(f.lhs(), negate_literals),
                           swap_connectives(f.rhs(), negate_literals));
    case K::Quant:
      return Formula::quant(flip(f.quantifier()), f.var(),
                            swap_connectives(f.body(), negate_literals));
    case K::W:
      break;
  }
  return swap_connectives(elaborate_w(f), negate_literals);
}

}  // namespace detail

/// NNF negation. W nodes are elaborated first.
inline Formula negate(const Formula& f) {
  return detail::swap_connectives(elaborate_w(f), true);
}

/// Dual formula: like negation but literals keep their polarity. W nodes are
/// elaborated first.
inline Formula dualize(const Formula& f) {
  return detail::swap_connectives(elaborate_w(f), false);
}

/// Names of all predicates occurring in `f`.
inline std::set<std::string> predicates_of(const Formula& f) {
  std::set<std::string> out;
  auto rec = [&](auto&& self, const Formula& g) -> void {
    switch (g.kind()) {
      case Formula::Kind::Lit: out.insert(g.pred()); break;
      case Formula::Kind::And:
      case Formula::Kind::Or:
      case Formula::Kind::W:
        self(self, g.lhs());
        self(self, g.rhs());
        break;
      case Formula::Kind::Quant: self(self, g.body()); break;
      default: break;
    }
  };
  rec(rec, f);
  return out;
}

/// Throws UnknownPredicate when `f` mentions a predicate outside `preds`.
inline void require_predicates(const Formula& f, const PredSet& preds) {
  for (const auto& p : predicates_of(f))
    if (!preds.contains(p)) throw UnknownPredicate(p);
}

namespace detail {

struct Features {
  bool equality = false;
  bool infinity = false;  // infinity quantifiers or W
};

inline void features(const Formula& f, Features& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Eq: out.equality = true; break;
    case K::And:
    case K::Or:
      features(f.lhs(), out);
      features(f.rhs(), out);
      break;
    case K::Quant:
      if (f.quantifier() == Quantifier::ExistsInf ||
          f.quantifier() == Quantifier::ForallInf)
        out.infinity = true;
      features(f.body(), out);
      break;
    case K::W:
      out.infinity = true;
      features(f.lhs(), out);
      features(f.rhs(), out);
      break;
    default: break;
  }
}

}  // namespace detail

/// Smallest dialect whose syntax admits `f`.
inline Dialect infer_dialect(const Formula& f) {
  detail::Features ft;
  detail::features(f, ft);
  if (ft.infinity) return Dialect::FOEI;
  if (ft.equality) return Dialect::FOE;
  return Dialect::M;
}

inline bool in_dialect(const Formula& f, Dialect d) {
  return static_cast<int>(infer_dialect(f)) <= static_cast<int>(d);
}

inline void require_dialect(const Formula& f, Dialect d) {
  if (!in_dialect(f, d))
    throw DialectError(std::string("formula is not in dialect ") +
                       to_string(d) + " (needs " +
                       to_string(infer_dialect(f)) + ")");
}

/// Syntactic fragments recognised by `check_fragment`.
struct FragmentSpec {
  enum class Kind {
    PositiveIn,                 // no negative literal over B
    SyntacticallyContinuousIn,  // continuity grammar relative to B
    Universal,                  // no E or Einf
    EqualityFree,               // no equality atoms
  };
  Kind kind;
  std::set<std::string> b;

  static FragmentSpec positive_in(std::set<std::string> b) {
    return {Kind::PositiveIn, std::move(b)};
  }
  static FragmentSpec continuous_in(std::set<std::string> b) {
    return {Kind::SyntacticallyContinuousIn, std::move(b)};
  }
  static FragmentSpec universal() { return {Kind::Universal, {}}; }
  static FragmentSpec equality_free() { return {Kind::EqualityFree, {}}; }
};

namespace detail {

inline bool b_free(const Formula& f, const std::set<std::string>& b) {
  for (const auto& p : predicates_of(f))
    if (b.count(p)) return false;
  return true;
}

inline bool positive_in(const Formula& f, const std::set<std::string>& b) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Lit: return f.positive() || !b.count(f.pred());
    case K::And:
    case K::Or:
    case K::W:
      return positive_in(f.lhs(), b) && positive_in(f.rhs(), b);
    case K::Quant: return positive_in(f.body(), b);
    default: return true;
  }
}

// B-free subformulas, positive B-literals, closure under &, | and E, and
// W x.(a, b) with `a` in the fragment and `b` B-free.
inline bool continuous_in(const Formula& f, const std::set<std::string>& b) {
  using K = Formula::Kind;
  if (b_free(f, b)) return true;
  switch (f.kind()) {
    case K::Lit: return f.positive();
    case K::And:
    case K::Or:
      return continuous_in(f.lhs(), b) && continuous_in(f.rhs(), b);
    case K::Quant:
      return f.quantifier() == Quantifier::Exists && continuous_in(f.body(), b);
    case K::W: return b_free(f.rhs(), b) && continuous_in(f.lhs(), b);
    default: return true;
  }
}

inline bool universal(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::And:
    case K::Or:
    case K::W:
      return universal(f.lhs()) && universal(f.rhs());
    case K::Quant:
      return (f.quantifier() == Quantifier::Forall ||
              f.quantifier() == Quantifier::ForallInf) &&
             universal(f.body());
    default: return true;
  }
}

}  // namespace detail

inline bool check_fragment(const Formula& f, const FragmentSpec& spec) {
  switch (spec.kind) {
    case FragmentSpec::Kind::PositiveIn: return detail::positive_in(f, spec.b);
    case FragmentSpec::Kind::SyntacticallyContinuousIn:
      return detail::continuous_in(f, spec.b);
    case FragmentSpec::Kind::Universal: return detail::universal(f);
    case FragmentSpec::Kind::EqualityFree: {
      detail::Features ft;
      detail::features(f, ft);
      return !ft.equality;
    }
  }
  return false;
}

}  // namespace monadic
