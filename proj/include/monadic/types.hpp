#pragma once

#include <string>
#include <vector>

#include "monadic/formula.hpp"
#include "monadic/pred_set.hpp"
#include "monadic/syntax.hpp"

namespace monadic {

/// How a type S is rendered as a formula in one variable.
///   Full:     every predicate, positive if in S, negative otherwise.
///   Upward:   positive part of S, negative literals only outside S and B.
///   Positive: positive part of S only.
struct TypeRendering {
  enum class Mode { Full, Upward, Positive };
  Mode mode = Mode::Full;
  TypeMask b = 0;  // for Upward

  static TypeRendering full() { return {}; }
  static TypeRendering upward(TypeMask b) { return {Mode::Upward, b}; }
  static TypeRendering positive() { return {Mode::Positive, 0}; }
};

/// Type formula of `s` in variable `var`; predicates in index order.
inline Formula type_formula(const PredSet& preds, TypeMask s,
                            const std::string& var,
                            TypeRendering r = TypeRendering::full()) {
  std::vector<Formula> lits;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    TypeMask bit = TypeMask{1} << i;
    const std::string& a = preds.names()[i];
    if (s & bit) {
      lits.push_back(Formula::lit(a, var, true));
    } else if (r.mode == TypeRendering::Mode::Full ||
               (r.mode == TypeRendering::Mode::Upward && !(r.b & bit))) {
      lits.push_back(Formula::lit(a, var, false));
    }
  }
  return Formula::conj_all(lits);
}

/// Pairwise distinctness of `vars`.
inline Formula diff(const std::vector<std::string>& vars) {
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      parts.push_back(Formula::eq(vars[i], vars[j], false));
  return Formula::conj_all(parts);
}

/// Equations x_i = x_j for i < j; their disjunction negates `diff`.
inline std::vector<Formula> equalities(const std::vector<std::string>& vars) {
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      parts.push_back(Formula::eq(vars[i], vars[j], true));
  return parts;
}

/// Disjunction of the type formulas of `types` in `var`, after `prefix`.
inline Formula some_type(const PredSet& preds, const std::vector<TypeMask>& types,
                         const std::string& var, TypeRendering r,
                         std::vector<Formula> prefix = {}) {
  for (TypeMask s : types) prefix.push_back(type_formula(preds, s, var, r));
  return Formula::disj_all(prefix);
}

/// Witness variable names x0, x1, ...
inline std::vector<std::string> witness_vars(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

/// Every type of `exist` is realised and every element has a type of
/// `bound`:  /\_{S in exist} E x. t_S(x)  &  A x. \/_{S in bound} t_S(x).
inline Formula nabla_m(const PredSet& preds, const std::vector<TypeMask>& exist,
                       const std::vector<TypeMask>& bound,
                       TypeRendering r = TypeRendering::full()) {
  std::vector<Formula> parts;
  for (TypeMask s : exist)
    parts.push_back(Formula::exists("x", type_formula(preds, s, "x", r)));
  parts.push_back(Formula::forall("x", some_type(preds, bound, "x", r)));
  return Formula::conj_all(parts);
}

/// Distinct witnesses x_i of type t[i], and every other element has a type
/// of `bound`. The universal variable is z, or x when there are no witnesses.
inline Formula nabla_foe(const PredSet& preds, const std::vector<TypeMask>& t,
                         const std::vector<TypeMask>& bound,
                         TypeRendering r = TypeRendering::full()) {
  std::vector<std::string> xs = witness_vars(t.size());
  const std::string z = t.empty() ? "x" : "z";
  std::vector<std::string> xz = xs;
  xz.push_back(z);
  std::vector<Formula> parts{diff(xs)};
  for (std::size_t i = 0; i < t.size(); ++i)
    parts.push_back(type_formula(preds, t[i], xs[i], r));
  // z is one of the witnesses, or has a type of `bound`
  parts.push_back(
      Formula::forall(z, some_type(preds, bound, z, r, equalities(xz))));
  Formula body = Formula::conj_all(parts);
  for (std::size_t i = t.size(); i-- > 0;) body = Formula::exists(xs[i], body);
  return body;
}

/// At most n elements of type s:  A x0 ... A xn. (some x_i = x_j) | (some
/// x_i not of type s).
inline Formula at_most(const PredSet& preds, TypeMask s, std::size_t n,
                       TypeRendering r = TypeRendering::full()) {
  std::vector<std::string> xs = witness_vars(n + 1);
  std::vector<Formula> parts = equalities(xs);
  for (const auto& x : xs) parts.push_back(negate(type_formula(preds, s, x, r)));
  Formula f = Formula::disj_all(parts);
  for (std::size_t i = xs.size(); i-- > 0;) f = Formula::forall(xs[i], f);
  return f;
}

/// Infinitely many elements of each type of `sigma`, and all but finitely
/// many elements have a type of `sigma`.
inline Formula nabla_inf(const PredSet& preds, const std::vector<TypeMask>& sigma,
                         TypeRendering r = TypeRendering::full()) {
  std::vector<Formula> parts;
  for (TypeMask s : sigma)
    parts.push_back(Formula::exists_inf("y", type_formula(preds, s, "y", r)));
  parts.push_back(Formula::forall_inf("y", some_type(preds, sigma, "y", r)));
  return Formula::conj_all(parts);
}

}  // namespace monadic
