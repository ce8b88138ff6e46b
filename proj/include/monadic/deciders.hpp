#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "monadic/abstract.hpp"
#include "monadic/class_spec.hpp"
#include "monadic/syntax.hpp"
#include "monadic/translations.hpp"

namespace monadic {

namespace detail {

inline void check_sentence(const Formula& f, const PredSet& preds, Dialect d) {
  if (!f.is_sentence()) throw UnboundVariable(f.free_vars().front());
  require_dialect(f, d);
  require_predicates(f, preds);
}

// A sentence split at its top-level connectives into sentence leaves. A leaf of
// rank r has one truth value per class at rank r, so it is evaluated once per
// projection of the class at hand, on the smallest member of that projection.
class RankedFormula {
 public:
  RankedFormula(const Formula& f, const PredSet& preds, Dialect d)
      : preds_(preds), dialect_(d) {
    root_ = build(f);
  }

  bool eval(const Profile& p) { return eval(root_, p); }

 private:
  struct Node {
    bool is_or = false;
    std::vector<int> kids;  // empty for a leaf
    int leaf = -1;
  };
  struct Leaf {
    AbstractFormula f;
    std::size_t threshold;
    std::unordered_map<std::vector<std::uint32_t>, bool, KeyHash> seen;
  };

  int build(const Formula& f) {
    Node n;
    if (f.is(Formula::Kind::And) || f.is(Formula::Kind::Or)) {
      n.is_or = f.is(Formula::Kind::Or);
      std::vector<Formula> parts;
      flatten(f, f.kind(), parts);
      // cheap leaves first, so that short-circuiting spares the costly ones
      std::stable_sort(parts.begin(), parts.end(),
                       [](const Formula& x, const Formula& y) { return qrank(x) < qrank(y); });
      for (const auto& part : parts) n.kids.push_back(build(part));
    } else {
      const std::size_t r = qrank(f);
      const std::size_t t = r == 0 ? 0 : dialect_ == Dialect::M ? 1 : r;
      n.leaf = static_cast<int>(leaves_.size());
      leaves_.push_back(Leaf{AbstractFormula(f, preds_), t, {}});
    }
    nodes_.push_back(std::move(n));
    return static_cast<int>(nodes_.size()) - 1;
  }

  static void flatten(const Formula& f, Formula::Kind k, std::vector<Formula>& out) {
    if (f.is(k)) {
      flatten(f.lhs(), k, out);
      flatten(f.rhs(), k, out);
    } else {
      out.push_back(f);
    }
  }

  bool eval(int i, const Profile& p) {
    const Node& n = nodes_[i];
    if (n.leaf >= 0) return eval_leaf(leaves_[n.leaf], p);
    for (int k : n.kids)
      if (eval(k, p) == n.is_or) return n.is_or;
    return !n.is_or;
  }

  bool eval_leaf(Leaf& l, const Profile& p) {
    const std::uint32_t omega = 0xffffffffu;
    key_.clear();
    for (Count c : p.counts())
      key_.push_back(c.is_omega() ? omega
                                  : static_cast<std::uint32_t>(
                                        std::min<std::uint64_t>(c.value(), l.threshold)));
    auto it = l.seen.find(key_);
    if (it != l.seen.end()) return it->second;
    std::vector<Count> counts;
    for (auto v : key_) counts.push_back(v == omega ? kOmega : Count::fin(v));
    bool v = l.f.eval(Profile(preds_, std::move(counts)));
    l.seen.emplace(key_, v);
    return v;
  }

  PredSet preds_;
  Dialect dialect_;
  std::vector<Node> nodes_;
  std::vector<Leaf> leaves_;
  std::vector<std::uint32_t> key_;
  int root_ = -1;
};

}  // namespace detail

/// First class (in canonical order, at rank max(qrank)) on which the two
/// sentences differ.
inline std::optional<ClassSpec> distinguishing_class(const Formula& a,
                                                     const Formula& b,
                                                     const PredSet& preds,
                                                     Dialect d,
                                                     std::uint64_t cap = kDefaultCap) {
  detail::check_sentence(a, preds, d);
  detail::check_sentence(b, preds, d);
  detail::RankedFormula fa(a, preds, d), fb(b, preds, d);
  std::optional<ClassSpec> found;
  for_each_class_spec(
      preds, std::max(qrank(a), qrank(b)), d,
      [&](const ClassSpec& spec) {
        Profile p = representative_of(spec);
        if (fa.eval(p) != fb.eval(p)) {
          found = spec;
          return false;
        }
        return true;
      },
      cap);
  return found;
}

inline bool are_equivalent(const Formula& a, const Formula& b,
                           const PredSet& preds, Dialect d,
                           std::uint64_t cap = kDefaultCap) {
  return !distinguishing_class(a, b, preds, d, cap).has_value();
}

/// First class whose representative satisfies `f`.
inline std::optional<ClassSpec> satisfying_class(const Formula& f,
                                                 const PredSet& preds, Dialect d,
                                                 std::uint64_t cap = kDefaultCap) {
  detail::check_sentence(f, preds, d);
  detail::RankedFormula af(f, preds, d);
  std::optional<ClassSpec> found;
  for_each_class_spec(
      preds, qrank(f), d,
      [&](const ClassSpec& spec) {
        if (af.eval(representative_of(spec))) {
          found = spec;
          return false;
        }
        return true;
      },
      cap);
  return found;
}

inline bool is_satisfiable(const Formula& f, const PredSet& preds, Dialect d,
                           std::uint64_t cap = kDefaultCap) {
  return satisfying_class(f, preds, d, cap).has_value();
}

struct PropertyQuery {
  enum class Kind { MonotoneIn, ContinuousIn, PreservedUnderSubmodels,
                    QuotientInvariant };
  Kind kind;
  std::set<std::string> b;  // MonotoneIn / ContinuousIn

  static PropertyQuery monotone_in(std::set<std::string> b) {
    return {Kind::MonotoneIn, std::move(b)};
  }
  static PropertyQuery continuous_in(std::set<std::string> b) {
    return {Kind::ContinuousIn, std::move(b)};
  }
  static PropertyQuery submodels() { return {Kind::PreservedUnderSubmodels, {}}; }
  static PropertyQuery quotients() { return {Kind::QuotientInvariant, {}}; }
};

/// Fragment that a positive certificate for `q` belongs to.
inline FragmentSpec certificate_fragment(const PropertyQuery& q) {
  switch (q.kind) {
    case PropertyQuery::Kind::MonotoneIn: return FragmentSpec::positive_in(q.b);
    case PropertyQuery::Kind::ContinuousIn: return FragmentSpec::continuous_in(q.b);
    case PropertyQuery::Kind::PreservedUnderSubmodels:
      return FragmentSpec::universal();
    case PropertyQuery::Kind::QuotientInvariant:
      return FragmentSpec::equality_free();
  }
  return FragmentSpec::universal();
}

/// Outcome of a property check. On success `witness` is an equivalent
/// sentence in the matching fragment; otherwise `counterexample` is a class
/// on which the sentence and its translation differ.
struct Verdict {
  bool holds = false;
  std::optional<Formula> witness;
  std::optional<ClassSpec> counterexample;
  /// Dialect the decision was made in.
  Dialect decided_in = Dialect::FOE;
};

namespace detail {

inline Verdict compare(const Formula& phi, const Formula& translated,
                       const PredSet& preds, Dialect d, std::uint64_t cap) {
  Verdict v;
  v.decided_in = d;
  v.counterexample = distinguishing_class(phi, translated, preds, d, cap);
  v.holds = !v.counterexample;
  if (v.holds) v.witness = translated;
  return v;
}

}  // namespace detail

/// Decides a semantic property by translating and checking equivalence.
/// Continuity of an FOE sentence is decided in FOEI, where infinite models
/// are distinguished.
inline Verdict decide_property(const Formula& phi, const PredSet& preds,
                               const PropertyQuery& q, Dialect d,
                               std::uint64_t cap = kDefaultCap) {
  detail::check_sentence(phi, preds, d);
  for (const auto& p : q.b)
    if (!preds.contains(p)) throw UnknownPredicate(p);
  switch (q.kind) {
    case PropertyQuery::Kind::MonotoneIn:
      return detail::compare(phi, translate_monotone(phi, preds, q.b, d, cap),
                             preds, d, cap);
    case PropertyQuery::Kind::ContinuousIn: {
      const Dialect dc = d == Dialect::FOE ? Dialect::FOEI : d;
      Verdict mono = detail::compare(
          phi, translate_monotone(phi, preds, q.b, dc, cap), preds, dc, cap);
      if (!mono.holds) {
        mono.witness.reset();
        return mono;
      }
      return detail::compare(phi, translate_continuous(phi, preds, q.b, dc, cap),
                             preds, dc, cap);
    }
    case PropertyQuery::Kind::PreservedUnderSubmodels:
      return detail::compare(phi, translate_universal(phi, preds, d, cap), preds,
                             d, cap);
    case PropertyQuery::Kind::QuotientInvariant:
      if (d == Dialect::M) {
        Verdict v;
        v.holds = true;
        v.witness = phi;
        v.decided_in = d;
        return v;
      }
      return detail::compare(phi, translate_quotient(phi, preds, d, false,
                                                     std::nullopt, cap),
                             preds, d, cap);
  }
  return {};
}

}  // namespace monadic
