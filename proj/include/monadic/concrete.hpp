#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "monadic/detail/compiled.hpp"
#include "monadic/error.hpp"
#include "monadic/formula.hpp"
#include "monadic/pred_set.hpp"
#include "monadic/syntax.hpp"

namespace monadic {

/// Default cap on the size of enumerations and searches.
inline constexpr std::uint64_t kDefaultCap = 1'000'000;

/// Finite model: element i has colour (type) colours[i].
class ConcreteModel {
 public:
  ConcreteModel() = default;
  ConcreteModel(PredSet preds, std::vector<TypeMask> colours)
      : preds_(std::move(preds)), colours_(std::move(colours)) {
    for (TypeMask c : colours_)
      if (c & ~preds_.full())
        throw InvalidArgument("colour outside the predicate set");
  }

  const PredSet& preds() const { return preds_; }
  const std::vector<TypeMask>& colours() const { return colours_; }
  std::size_t size() const { return colours_.size(); }
  TypeMask colour(std::size_t i) const { return colours_[i]; }

  friend bool operator==(const ConcreteModel& a, const ConcreteModel& b) {
    return a.preds_ == b.preds_ && a.colours_ == b.colours_;
  }

 private:
  PredSet preds_;
  std::vector<TypeMask> colours_;
};

/// Variable assignment: variable name to element index.
using Assignment = std::map<std::string, std::size_t>;

namespace detail {

class ConcreteEvaluator {
 public:
  ConcreteEvaluator(const Compiled& c, const ConcreteModel& m)
      : c_(c), m_(m), val_(c.num_slots(), 0) {}

  void bind(int slot, std::size_t elem) { val_[slot] = elem; }
  bool run() { return eval(c_.root()); }

 private:
  bool eval(int i) {
    const CNode& n = c_.node(i);
    switch (n.op) {
      case Op::Top: return true;
      case Op::Bottom: return false;
      case Op::Lit: return ((m_.colour(val_[n.v1]) & n.bit) != 0) == n.positive;
      case Op::Eq: return (val_[n.v1] == val_[n.v2]) == n.positive;
      case Op::And: return eval(n.a) && eval(n.b);
      case Op::Or: return eval(n.a) || eval(n.b);
      case Op::Block: return block(c_.block(n.block), 0);
      case Op::ExistsInf: return false;  // finite domain
      case Op::ForallInf: return true;
    }
    return false;
  }

  // Items at `level` are checked, then the next variable is bound.
  bool block(const Block& b, std::size_t level) {
    for (int it : b.items[level])
      if (eval(it) != b.exists) return !b.exists;
    if (level == b.vars.size()) return b.exists;
    int s = b.vars[level];
    std::size_t saved = val_[s];
    bool result = !b.exists;
    for (std::size_t e = 0; e < m_.size(); ++e) {
      val_[s] = e;
      if (block(b, level + 1) == b.exists) {
        result = b.exists;
        break;
      }
    }
    val_[s] = saved;
    return result;
  }

  const Compiled& c_;
  const ConcreteModel& m_;
  std::vector<std::size_t> val_;
};

inline void bind_assignment(const Formula& f, const Compiled& c,
                            const ConcreteModel& m, const Assignment& g,
                            ConcreteEvaluator& ev) {
  for (const auto& v : f.free_vars()) {
    auto it = g.find(v);
    if (it == g.end()) throw UnboundVariable(v);
    if (it->second >= m.size())
      throw InvalidArgument("assignment of '" + v + "' is out of range");
    ev.bind(c.slot_of(v), it->second);
  }
}

}  // namespace detail

/// Formula compiled for repeated concrete evaluation.
class ConcreteFormula {
 public:
  ConcreteFormula(const Formula& f, const PredSet& preds)
      : f_(f), c_(f, preds) {}

  bool eval(const ConcreteModel& m, const Assignment& g = {}) const {
    if (!(m.preds() == c_.preds()))
      throw InvalidArgument("model and formula use different predicate sets");
    detail::ConcreteEvaluator ev(c_, m);
    detail::bind_assignment(f_, c_, m, g, ev);
    return ev.run();
  }

 private:
  Formula f_;
  detail::Compiled c_;
};

/// Truth of `f` in `m` under `g`. Every free variable of `f` must be bound.
inline bool eval_concrete(const ConcreteModel& m, const Formula& f,
                          const Assignment& g = {}) {
  return ConcreteFormula(f, m.preds()).eval(m, g);
}

/// Model with every colour replaced by its complement.
inline ConcreteModel complement(const ConcreteModel& m) {
  std::vector<TypeMask> cs;
  for (TypeMask c : m.colours()) cs.push_back(~c & m.preds().full());
  return ConcreteModel(m.preds(), std::move(cs));
}

namespace detail {

inline void check_cap(const char* what, long double needed, std::uint64_t cap) {
  if (needed > static_cast<long double>(cap))
    throw CapExceeded(what, static_cast<unsigned long long>(
                                std::min<long double>(needed, 1e19L)),
                      cap);
}

inline long double ipow(long double b, std::size_t e) {
  long double r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace detail

/// All models over `preds` with at most `max_size` elements, by size then
/// lexicographically by colour sequence.
inline std::vector<ConcreteModel> enumerate_models(const PredSet& preds,
                                                   std::size_t max_size,
                                                   std::uint64_t cap = kDefaultCap) {
  long double total = 0;
  for (std::size_t n = 0; n <= max_size; ++n)
    total += detail::ipow(static_cast<long double>(preds.num_types()), n);
  detail::check_cap("enumerate_models", total, cap);
  std::vector<ConcreteModel> out;
  const TypeMask t = static_cast<TypeMask>(preds.num_types());
  for (std::size_t n = 0; n <= max_size; ++n) {
    std::vector<TypeMask> cs(n, 0);
    while (true) {
      out.emplace_back(preds, cs);
      std::size_t i = n;
      while (i > 0 && ++cs[i - 1] == t) cs[--i] = 0;
      if (i == 0) break;
    }
  }
  return out;
}

/// Submodels induced by each subset of the domain, including the empty one.
inline std::vector<ConcreteModel> submodels_of(const ConcreteModel& m,
                                               std::uint64_t cap = kDefaultCap) {
  detail::check_cap("submodels_of", detail::ipow(2, m.size()), cap);
  std::vector<ConcreteModel> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m.size()); ++s) {
    std::vector<TypeMask> cs;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (s & (std::uint64_t{1} << i)) cs.push_back(m.colour(i));
    out.emplace_back(m.preds(), std::move(cs));
  }
  return out;
}

/// Models obtained by adding predicates of `b` to elements, in every way.
inline std::vector<ConcreteModel> b_extensions_of(const ConcreteModel& m,
                                                  const std::set<std::string>& b,
                                                  std::uint64_t cap = kDefaultCap) {
  TypeMask bmask = m.preds().mask_of(b);
  std::vector<std::vector<TypeMask>> choices;
  long double total = 1;
  for (TypeMask c : m.colours()) {
    std::vector<TypeMask> opts;
    TypeMask add = bmask & ~c;
    // every subset of `add`
    for (TypeMask s = add;; s = (s - 1) & add) {
      opts.push_back(c | s);
      if (s == 0) break;
    }
    std::reverse(opts.begin(), opts.end());
    total *= static_cast<long double>(opts.size());
    choices.push_back(std::move(opts));
  }
  detail::check_cap("b_extensions_of", total, cap);
  std::vector<ConcreteModel> out;
  std::vector<std::size_t> idx(m.size(), 0);
  while (true) {
    std::vector<TypeMask> cs(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) cs[i] = choices[i][idx[i]];
    out.emplace_back(m.preds(), std::move(cs));
    std::size_t i = m.size();
    while (i > 0 && ++idx[i - 1] == choices[i - 1].size()) idx[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

/// Quotients of `m`: one model per partition of the domain into
/// colour-homogeneous blocks (each block becomes one element).
inline std::vector<ConcreteModel> quotients_of(const ConcreteModel& m,
                                               std::uint64_t cap = kDefaultCap) {
  // Restricted growth strings over the domain, keeping colour-homogeneous
  // partitions only.
  std::vector<ConcreteModel> out;
  std::vector<std::size_t> block(m.size(), 0);
  std::vector<TypeMask> block_colour;
  std::uint64_t produced = 0;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == m.size()) {
      if (++produced > cap) throw CapExceeded("quotients_of", produced, cap);
      out.emplace_back(m.preds(), block_colour);
      return;
    }
    for (std::size_t k = 0; k < block_colour.size(); ++k) {
      if (block_colour[k] != m.colour(i)) continue;
      block[i] = k;
      self(self, i + 1);
    }
    block[i] = block_colour.size();
    block_colour.push_back(m.colour(i));
    self(self, i + 1);
    block_colour.pop_back();
  };
  rec(rec, 0);
  return out;
}

}  // namespace monadic
