#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "monadic/detail/compiled.hpp"
#include "monadic/error.hpp"
#include "monadic/formula.hpp"
#include "monadic/profile.hpp"

namespace monadic {

/// Distinct named elements of a profile, given by their types. Variables are
/// bound to positions in `elems`.
struct NamedContext {
  std::vector<TypeMask> elems;
};

namespace detail {

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::size_t h = v.size();
    for (auto x : v) h = h * 0x100000001b3ULL ^ x;
    return h;
  }
};

// Truth only depends on the elements that the free variables of the current
// subformula denote; every other element of a type is interchangeable, so a
// quantifier ranges over those named elements plus one fresh element per type
// that still has unnamed members.
class AbstractEvaluator {
 public:
  AbstractEvaluator(const Compiled& c, const Profile& p, bool memo)
      : c_(c), p_(p), memo_on_(memo), slot_elem_(c.num_slots(), -1) {}

  void name_elements(const NamedContext& ctx) { elem_type_ = ctx.elems; }
  void bind(int slot, int elem) { slot_elem_[slot] = elem; }
  bool run() { return eval(c_.root()); }

 private:
  bool eval(int i) {
    const CNode& n = c_.node(i);
    switch (n.op) {
      case Op::Top: return true;
      case Op::Bottom: return false;
      case Op::Lit:
        return ((elem_type_[slot_elem_[n.v1]] & n.bit) != 0) == n.positive;
      case Op::Eq: return (slot_elem_[n.v1] == slot_elem_[n.v2]) == n.positive;
      case Op::And: return eval(n.a) && eval(n.b);
      case Op::Or: return eval(n.a) || eval(n.b);
      case Op::Block: {
        const Block& b = c_.block(n.block);
        for (int it : b.items[0])
          if (eval(it) != b.exists) return !b.exists;
        return solve(n.block, 0);
      }
      case Op::ExistsInf:
      case Op::ForallInf: return infinite(i);
    }
    return false;
  }

  // Distinct elements denoted by slots in `m`, with named count per type.
  void referenced(SlotMask m, std::vector<int>& elems) {
    for (int s = 0; m; ++s, m >>= 1) {
      if (!(m & 1)) continue;
      int e = slot_elem_[s];
      bool seen = false;
      for (int x : elems) seen |= x == e;
      if (!seen) elems.push_back(e);
    }
  }

  std::uint64_t named_of_type(const std::vector<int>& elems, TypeMask t) const {
    std::uint64_t k = 0;
    for (int e : elems) k += elem_type_[e] == t;
    return k;
  }

  void make_key(std::uint32_t tag, std::uint32_t tag2, SlotMask m) {
    key_.clear();
    key_.push_back(tag);
    key_.push_back(tag2);
    int ids[kMaxSlots];
    int n_ids = 0;
    for (int s = 0; m; ++s, m >>= 1) {
      if (!(m & 1)) continue;
      int e = slot_elem_[s];
      int r = -1;
      for (int j = 0; j < n_ids; ++j)
        if (ids[j] == e) r = j;
      if (r < 0) {
        r = n_ids;
        ids[n_ids++] = e;
      }
      key_.push_back((static_cast<std::uint32_t>(r) << 16) | elem_type_[e]);
    }
  }

  // Memo lookup on the current key; returns -1 when absent.
  int lookup() {
    if (!memo_on_) return -1;
    auto it = memo_.find(key_);
    return it == memo_.end() ? -1 : it->second;
  }
  bool remember(const std::vector<std::uint32_t>& key, bool v) {
    if (memo_on_) memo_.emplace(key, v);
    return v;
  }

  // Binds the chain variable at `level` in every relevant way and recurses.
  bool solve(int bi, std::size_t level) {
    const Block& b = c_.block(bi);
    if (level == b.vars.size()) return b.exists;
    const SlotMask rest = b.rest[level];
    make_key(0x80000000u | static_cast<std::uint32_t>(bi),
             static_cast<std::uint32_t>(level), rest);
    int hit = lookup();
    if (hit >= 0) return hit != 0;
    std::vector<std::uint32_t> key = key_;

    std::vector<int> named;
    referenced(rest, named);
    const int s = b.vars[level];
    const int saved = slot_elem_[s];
    bool result = !b.exists;
    auto try_candidate = [&]() {
      bool v = true;
      bool decided = false;
      for (int it : b.items[level + 1])
        if (eval(it) != b.exists) {
          v = !b.exists;
          decided = true;
          break;
        }
      if (!decided) v = solve(bi, level + 1);
      return v == b.exists;
    };
    bool done = false;
    for (std::size_t j = 0; j < named.size() && !done; ++j) {
      slot_elem_[s] = named[j];
      if (try_candidate()) {
        result = b.exists;
        done = true;
      }
    }
    const TypeMask nt = static_cast<TypeMask>(p_.counts().size());
    for (TypeMask t = 0; t < nt && !done; ++t) {
      if (!p_[t].minus(named_of_type(named, t)).at_least(1)) continue;
      elem_type_.push_back(t);
      slot_elem_[s] = static_cast<int>(elem_type_.size()) - 1;
      if (try_candidate()) {
        result = b.exists;
        done = true;
      }
      elem_type_.pop_back();
    }
    slot_elem_[s] = saved;
    return remember(key, result);
  }

  bool infinite(int i) {
    const CNode& n = c_.node(i);
    const bool exists = n.op == Op::ExistsInf;
    make_key(static_cast<std::uint32_t>(i), 0, n.free);
    int hit = lookup();
    if (hit >= 0) return hit != 0;
    std::vector<std::uint32_t> key = key_;
    const int saved = slot_elem_[n.v1];
    bool result = !exists;
    const TypeMask nt = static_cast<TypeMask>(p_.counts().size());
    for (TypeMask t = 0; t < nt; ++t) {
      if (!p_[t].is_omega()) continue;
      elem_type_.push_back(t);
      slot_elem_[n.v1] = static_cast<int>(elem_type_.size()) - 1;
      bool v = eval(n.a);
      elem_type_.pop_back();
      if (v == exists) {
        result = exists;
        break;
      }
    }
    slot_elem_[n.v1] = saved;
    return remember(key, result);
  }

  const Compiled& c_;
  const Profile& p_;
  bool memo_on_;
  std::vector<TypeMask> elem_type_;
  std::vector<int> slot_elem_;
  std::vector<std::uint32_t> key_;
  std::unordered_map<std::vector<std::uint32_t>, bool, KeyHash> memo_;
};

}  // namespace detail

/// Formula compiled once for evaluation on many profiles.
class AbstractFormula {
 public:
  AbstractFormula(const Formula& f, const PredSet& preds) : f_(f), c_(f, preds) {}

  const Formula& formula() const { return f_; }

  bool eval(const Profile& p, const NamedContext& ctx = {},
            const std::map<std::string, std::size_t>& g = {},
            bool memo = true) const {
    if (!(p.preds() == c_.preds()))
      throw InvalidArgument("profile and formula use different predicate sets");
    std::vector<std::uint64_t> used(p.counts().size(), 0);
    for (TypeMask t : ctx.elems) {
      if (t >= used.size()) throw InvalidArgument("named element has bad type");
      if (!p[t].at_least(++used[t]))
        throw InvalidArgument("more named elements of type " +
                              p.preds().type_to_string(t) + " than the profile has");
    }
    detail::AbstractEvaluator ev(c_, p, memo);
    ev.name_elements(ctx);
    for (const auto& v : f_.free_vars()) {
      auto it = g.find(v);
      if (it == g.end()) throw UnboundVariable(v);
      if (it->second >= ctx.elems.size())
        throw InvalidArgument("assignment of '" + v + "' is out of range");
      ev.bind(c_.slot_of(v), static_cast<int>(it->second));
    }
    return ev.run();
  }

 private:
  Formula f_;
  detail::Compiled c_;
};

/// Truth of `f` in any model with profile `p`, where the variables in `g`
/// denote the named elements of `ctx`.
inline bool eval_abstract(const Profile& p, const Formula& f,
                          const NamedContext& ctx = {},
                          const std::map<std::string, std::size_t>& g = {}) {
  return AbstractFormula(f, p.preds()).eval(p, ctx, g);
}

}  // namespace monadic
