#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "monadic/normal_form.hpp"
#include "monadic/syntax.hpp"
#include "monadic/types.hpp"

namespace monadic {

namespace detail {

inline NormalForm translation_nf(const Formula& phi, const PredSet& preds,
                                 Dialect d, std::uint64_t cap) {
  NormalForm nf = basic_nf(phi, preds, d, cap);
  return d == Dialect::FOEI ? strengthen_nf(std::move(nf)) : nf;
}

inline TypeMask b_mask(const PredSet& preds, const std::set<std::string>& b) {
  return preds.mask_of(b);
}

inline bool meets(const std::vector<TypeMask>& types, TypeMask b) {
  for (TypeMask s : types)
    if (s & b) return true;
  return false;
}

}  // namespace detail

/// Monotone in B: the basic form with every type rendered upward in B.
/// The result is positive in B.
inline Formula translate_monotone(const Formula& phi, const PredSet& preds,
                                  const std::set<std::string>& b, Dialect d,
                                  std::uint64_t cap = kDefaultCap) {
  NormalForm nf = detail::translation_nf(phi, preds, d, cap);
  return nf_to_formula(nf, TypeRendering::upward(detail::b_mask(preds, b)));
}

/// Continuous image of one B-monotone disjunct.
///   M:    keeps the witnesses and bounds the universe by the realised types
///         disjoint from B.
///   FOEI: false when an infinite type meets B; otherwise the cofinite bound
///         is folded into W.
inline Formula continuous_disjunct(const PredSet& preds, Dialect d,
                                   const Disjunct& dj, TypeMask bm) {
  const TypeRendering r = TypeRendering::upward(bm);
  if (d == Dialect::M) {
    std::vector<TypeMask> free_of_b;
    for (TypeMask s : dj.sigma)
      if (!(s & bm)) free_of_b.push_back(s);
    return nabla_m(preds, dj.sigma, free_of_b, r);
  }
  if (d != Dialect::FOEI)
    throw DialectError("continuity translation is defined for m and foei");
  if (detail::meets(dj.sigma, bm)) return Formula::bottom();
  std::vector<std::string> xs = witness_vars(dj.t.size());
  std::vector<std::string> xz = xs;
  xz.push_back("z");
  std::vector<Formula> body{diff(xs)};
  for (std::size_t i = 0; i < dj.t.size(); ++i)
    body.push_back(type_formula(preds, dj.t[i], xs[i], r));
  Formula first = some_type(preds, detail::set_union(dj.pi, dj.sigma), "z", r,
                            equalities(xz));
  Formula second = some_type(preds, dj.sigma, "z", r);
  body.push_back(Formula::w("z", first, second));
  Formula f = Formula::conj_all(body);
  for (std::size_t i = xs.size(); i-- > 0;) f = Formula::exists(xs[i], f);
  std::vector<Formula> conj{f};
  for (TypeMask s : dj.sigma)
    conj.push_back(Formula::exists_inf("y", type_formula(preds, s, "y", r)));
  return Formula::conj_all(conj);
}

/// Continuous in B. The result is in the continuity fragment for B.
/// FOE input is rejected.
inline Formula translate_continuous(const Formula& phi, const PredSet& preds,
                                    const std::set<std::string>& b, Dialect d,
                                    std::uint64_t cap = kDefaultCap) {
  if (d == Dialect::FOE)
    throw DialectError("continuity translation is defined for m and foei");
  const TypeMask bm = detail::b_mask(preds, b);
  NormalForm nf = detail::translation_nf(phi, preds, d, cap);
  std::vector<Formula> parts;
  for (const auto& dj : nf.disjuncts) {
    Formula f = continuous_disjunct(preds, d, dj, bm);
    if (!f.is(Formula::Kind::Bottom)) parts.push_back(f);
  }
  return Formula::disj_all(parts);
}

/// Universal image of one disjunct: the sentence true exactly in the
/// submodels of its models. Besides the bound on the universe this caps
/// every type listed in T outside the bound at its multiplicity in T.
inline Formula universal_disjunct(const PredSet& preds, Dialect d,
                                  const Disjunct& dj) {
  const TypeRendering r = TypeRendering::full();
  if (d == Dialect::M) return Formula::forall("z", some_type(preds, dj.sigma, "z", r));
  const auto open = detail::set_union(dj.pi, dj.sigma);
  const auto listed = detail::distinct(dj.t);
  std::vector<Formula> parts{
      Formula::forall("z", some_type(preds, detail::set_union(listed, open), "z", r))};
  for (TypeMask s : listed) {
    if (std::binary_search(open.begin(), open.end(), s)) continue;
    auto n = static_cast<std::size_t>(std::count(dj.t.begin(), dj.t.end(), s));
    parts.push_back(at_most(preds, s, n, r));
  }
  if (d == Dialect::FOEI)
    parts.push_back(Formula::forall_inf("z", some_type(preds, dj.sigma, "z", r)));
  return Formula::conj_all(parts);
}

/// Preserved under submodels. The result is universal.
inline Formula translate_universal(const Formula& phi, const PredSet& preds,
                                   Dialect d, std::uint64_t cap = kDefaultCap) {
  NormalForm nf = detail::translation_nf(phi, preds, d, cap);
  std::vector<Formula> parts;
  for (const auto& dj : nf.disjuncts) parts.push_back(universal_disjunct(preds, d, dj));
  return Formula::disj_all(parts);
}

/// Quotient image of one disjunct: one witness per listed type and a bound
/// on the universe (FOE: the finite bound Pi; FOEI: the infinite types).
inline Formula quotient_disjunct(const PredSet& preds, Dialect d,
                                 const Disjunct& dj,
                                 TypeRendering r = TypeRendering::full()) {
  if (d == Dialect::M)
    throw DialectError("quotient translation is defined for foe and foei");
  std::vector<Formula> conj;
  auto xs = witness_vars(dj.t.size());
  for (std::size_t i = 0; i < dj.t.size(); ++i)
    conj.push_back(Formula::exists(xs[i], type_formula(preds, dj.t[i], xs[i], r)));
  const auto& bound = d == Dialect::FOE ? dj.pi : dj.sigma;
  conj.push_back(Formula::forall("x", some_type(preds, bound, "x", r)));
  return Formula::conj_all(conj);
}

/// Quotient invariant. The result is equality-free and has no infinity
/// quantifiers.
///
/// With `positive`, types are rendered by their positive part only; `phi`
/// must then be positive in every predicate, and the result is positive.
/// When `continuous_in` is also given, disjuncts with an infinite type
/// meeting it are dropped, so a sentence continuous in those predicates
/// maps into the continuity fragment.
inline Formula translate_quotient(
    const Formula& phi, const PredSet& preds, Dialect d, bool positive = false,
    const std::optional<std::set<std::string>>& continuous_in = std::nullopt,
    std::uint64_t cap = kDefaultCap) {
  if (d == Dialect::M)
    throw DialectError("quotient translation is defined for foe and foei");
  if (positive) {
    std::set<std::string> all(preds.names().begin(), preds.names().end());
    if (!check_fragment(phi, FragmentSpec::positive_in(all)))
      throw InvalidArgument("positive quotient translation needs a positive sentence");
  }
  const TypeRendering r =
      positive ? TypeRendering::positive() : TypeRendering::full();
  const TypeMask cm =
      continuous_in ? detail::b_mask(preds, *continuous_in) : TypeMask{0};
  NormalForm nf = detail::translation_nf(phi, preds, d, cap);
  std::vector<Formula> parts;
  for (const auto& dj : nf.disjuncts) {
    if (positive && cm && detail::meets(dj.sigma, cm)) continue;
    parts.push_back(quotient_disjunct(preds, d, dj, r));
  }
  return Formula::disj_all(parts);
}

}  // namespace monadic
