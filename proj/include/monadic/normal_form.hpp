#pragma once

#include <algorithm>
#include <compare>
#include <vector>

#include "monadic/abstract.hpp"
#include "monadic/class_spec.hpp"
#include "monadic/syntax.hpp"
#include "monadic/types.hpp"

namespace monadic {

/// One disjunct of a basic form.
///   M:    only `sigma` is used; the disjunct says exactly the types of
///         `sigma` are realised.
///   FOE:  distinct witnesses of the types in `t` and every other element has
///         a type in `pi`.
///   FOEI: the FOE part with bound `pi` plus `sigma`, and the types of
///         `sigma` are exactly those with infinitely many elements.
/// Sets are sorted by type mask; `t` lists types in mask order with
/// multiplicities contiguous.
struct Disjunct {
  std::vector<TypeMask> t, pi, sigma;

  friend auto operator<=>(const Disjunct&, const Disjunct&) = default;
};

struct NormalForm {
  PredSet preds;
  Dialect dialect = Dialect::FOE;
  std::size_t k = 0;
  std::vector<Disjunct> disjuncts;  // empty means false
};

namespace detail {

inline std::vector<TypeMask> set_union(const std::vector<TypeMask>& a,
                                       const std::vector<TypeMask>& b) {
  std::vector<TypeMask> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<TypeMask> distinct(std::vector<TypeMask> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline Disjunct disjunct_of(const ClassSpec& spec) {
  Disjunct d;
  if (spec.dialect() == Dialect::M) {
    d.sigma = spec.realised();
    return d;
  }
  const std::size_t k = spec.rank();
  for (TypeMask s = 0; s < spec.values().size(); ++s) {
    const ClassValue& v = spec[s];
    switch (v.kind) {
      case ClassValue::Kind::Exact: d.t.insert(d.t.end(), v.n, s); break;
      case ClassValue::Kind::AtLeastK:
        d.t.insert(d.t.end(), k, s);
        d.pi.push_back(s);
        break;
      case ClassValue::Kind::Infinite:
        d.t.insert(d.t.end(), k, s);
        d.sigma.push_back(s);
        break;
    }
  }
  return d;
}

}  // namespace detail

/// Basic form of a sentence: one disjunct per class (at rank
/// max(qrank, 1)) whose representative satisfies `phi`.
inline NormalForm basic_nf(const Formula& phi, const PredSet& preds, Dialect d,
                           std::uint64_t cap = kDefaultCap) {
  if (!phi.is_sentence()) throw UnboundVariable(phi.free_vars().front());
  require_dialect(phi, d);
  require_predicates(phi, preds);
  NormalForm nf;
  nf.preds = preds;
  nf.dialect = d;
  nf.k = std::max<std::size_t>(qrank(phi), 1);
  AbstractFormula af(phi, preds);
  for_each_class_spec(
      preds, nf.k, d,
      [&](const ClassSpec& spec) {
        if (af.eval(representative_of(spec)))
          nf.disjuncts.push_back(detail::disjunct_of(spec));
        return true;
      },
      cap);
  std::sort(nf.disjuncts.begin(), nf.disjuncts.end());
  return nf;
}

/// Adds the infinite types of each disjunct to its bound.
inline NormalForm strengthen_nf(NormalForm nf) {
  if (nf.dialect != Dialect::FOEI)
    throw DialectError("strengthening applies to FOEI normal forms");
  for (auto& dj : nf.disjuncts) dj.pi = detail::set_union(dj.pi, dj.sigma);
  std::sort(nf.disjuncts.begin(), nf.disjuncts.end());
  return nf;
}

/// Formula of one disjunct with every type rendered by `r`.
inline Formula disjunct_formula(const PredSet& preds, Dialect d,
                                const Disjunct& dj,
                                TypeRendering r = TypeRendering::full()) {
  switch (d) {
    case Dialect::M: return nabla_m(preds, dj.sigma, dj.sigma, r);
    case Dialect::FOE: return nabla_foe(preds, dj.t, dj.pi, r);
    case Dialect::FOEI:
      return Formula::conj(
          nabla_foe(preds, dj.t, detail::set_union(dj.pi, dj.sigma), r),
          nabla_inf(preds, dj.sigma, r));
  }
  return Formula::bottom();
}

inline Formula nf_to_formula(const NormalForm& nf,
                             TypeRendering r = TypeRendering::full()) {
  std::vector<Formula> parts;
  for (const auto& dj : nf.disjuncts)
    parts.push_back(disjunct_formula(nf.preds, nf.dialect, dj, r));
  return Formula::disj_all(parts);
}

}  // namespace monadic
