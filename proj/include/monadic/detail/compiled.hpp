#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "monadic/error.hpp"
#include "monadic/formula.hpp"
#include "monadic/pred_set.hpp"

namespace monadic::detail {

using SlotMask = std::uint64_t;
inline constexpr std::size_t kMaxSlots = 64;

enum class Op { Top, Bottom, Lit, Eq, And, Or, Block, ExistsInf, ForallInf };

struct CNode {
  Op op = Op::Top;
  TypeMask bit = 0;  // Lit
  int v1 = -1, v2 = -1;
  bool positive = true;
  int a = -1, b = -1;  // And/Or children; body of infinity quantifiers
  int block = -1;      // Block
  SlotMask free = 0;
};

// A maximal chain of E (or A) quantifiers over pairwise distinct variables,
// with the body split into conjuncts (or disjuncts). Item j is checked as soon
// as the last chain variable it mentions is bound.
struct Block {
  bool exists = true;
  std::vector<int> vars;                // slots, outermost first
  std::vector<std::vector<int>> items;  // items[i]: checked after i bindings
  std::vector<SlotMask> rest;           // rest[i]: free slots still needed
};

class Compiled {
 public:
  Compiled(const Formula& f, const PredSet& preds) : preds_(preds) {
    root_ = compile(f);
  }

  const PredSet& preds() const { return preds_; }
  int root() const { return root_; }
  const CNode& node(int i) const { return nodes_[i]; }
  const Block& block(int i) const { return blocks_[i]; }
  std::size_t num_slots() const { return slot_names_.size(); }
  std::size_t num_blocks() const { return blocks_.size(); }
  const std::string& slot_name(int s) const { return slot_names_[s]; }

  int slot_of(const std::string& v) const {
    auto it = slots_.find(v);
    return it == slots_.end() ? -1 : it->second;
  }

  static std::vector<int> slots_in(SlotMask m) {
    std::vector<int> out;
    for (int s = 0; m; ++s, m >>= 1)
      if (m & 1) out.push_back(s);
    return out;
  }

 private:
  int slot(const std::string& v) {
    auto it = slots_.find(v);
    if (it != slots_.end()) return it->second;
    if (slot_names_.size() >= kMaxSlots)
      throw InvalidArgument("too many distinct variables");
    int s = static_cast<int>(slot_names_.size());
    slots_.emplace(v, s);
    slot_names_.push_back(v);
    return s;
  }

  int push(CNode n) {
    nodes_.push_back(n);
    return static_cast<int>(nodes_.size()) - 1;
  }

  int binary(Op op, int a, int b) {
    CNode n;
    n.op = op;
    n.a = a;
    n.b = b;
    n.free = nodes_[a].free | nodes_[b].free;
    return push(n);
  }

  void flatten(const Formula& f, Formula::Kind k, std::vector<Formula>& out) {
    if (f.is(k)) {
      flatten(f.lhs(), k, out);
      flatten(f.rhs(), k, out);
    } else {
      out.push_back(f);
    }
  }

  // Chain of quantifiers of the same kind as `f`, which is an E or A node.
  int compile_block(const Formula& f) {
    Block bl;
    bl.exists = f.quantifier() == Quantifier::Exists;
    Formula cur = f;
    SlotMask bound = 0;
    while (cur.is(Formula::Kind::Quant) && cur.quantifier() == f.quantifier()) {
      int s = slot(cur.var());
      if (bound & (SlotMask{1} << s)) break;
      bound |= SlotMask{1} << s;
      bl.vars.push_back(s);
      cur = cur.body();
    }
    std::vector<Formula> parts;
    flatten(cur, bl.exists ? Formula::Kind::And : Formula::Kind::Or, parts);
    return finish_block(std::move(bl), compile_all(parts));
  }

  std::vector<int> compile_all(const std::vector<Formula>& parts) {
    std::vector<int> out;
    for (const auto& p : parts) out.push_back(compile(p));
    return out;
  }

  int finish_block(Block bl, const std::vector<int>& parts) {
    std::size_t m = bl.vars.size();
    bl.items.assign(m + 1, {});
    std::vector<SlotMask> need(m + 1, 0);  // free slots of items at level > i
    SlotMask body_free = 0;
    for (int p : parts) {
      SlotMask fr = nodes_[p].free;
      body_free |= fr;
      std::size_t lvl = 0;
      for (std::size_t i = 0; i < m; ++i)
        if (fr & (SlotMask{1} << bl.vars[i])) lvl = i + 1;
      bl.items[lvl].push_back(p);
      for (std::size_t i = 0; i < lvl; ++i) need[i] |= fr;
    }
    bl.rest.assign(m + 1, 0);
    for (std::size_t i = 0; i <= m; ++i) {
      SlotMask later = 0;
      for (std::size_t j = i; j < m; ++j) later |= SlotMask{1} << bl.vars[j];
      bl.rest[i] = need[i] & ~later;
    }
    SlotMask all_vars = 0;
    for (int s : bl.vars) all_vars |= SlotMask{1} << s;
    CNode n;
    n.op = Op::Block;
    n.block = static_cast<int>(blocks_.size());
    n.free = body_free & ~all_vars;
    blocks_.push_back(std::move(bl));
    return push(n);
  }

  int compile(const Formula& f) {
    auto hit = cache_.find(f.id());
    if (hit != cache_.end()) return hit->second;
    int out = compile_uncached(f);
    cache_.emplace(f.id(), out);
    keep_.push_back(f);
    return out;
  }

  int compile_uncached(const Formula& f) {
    using K = Formula::Kind;
    CNode n;
    switch (f.kind()) {
      case K::Top: n.op = Op::Top; return push(n);
      case K::Bottom: n.op = Op::Bottom; return push(n);
      case K::Lit:
        n.op = Op::Lit;
        n.bit = preds_.bit(f.pred());
        n.v1 = slot(f.var());
        n.positive = f.positive();
        n.free = SlotMask{1} << n.v1;
        return push(n);
      case K::Eq:
        n.op = Op::Eq;
        n.v1 = slot(f.var());
        n.v2 = slot(f.var2());
        n.positive = f.positive();
        n.free = (SlotMask{1} << n.v1) | (SlotMask{1} << n.v2);
        return push(n);
      case K::And: return binary(Op::And, compile(f.lhs()), compile(f.rhs()));
      case K::Or: return binary(Op::Or, compile(f.lhs()), compile(f.rhs()));
      case K::Quant:
        switch (f.quantifier()) {
          case Quantifier::Exists:
          case Quantifier::Forall:
            return compile_block(f);
          case Quantifier::ExistsInf:
          case Quantifier::ForallInf: {
            int s = slot(f.var());
            int body = compile(f.body());
            n.op = f.quantifier() == Quantifier::ExistsInf ? Op::ExistsInf
                                                           : Op::ForallInf;
            n.v1 = s;
            n.a = body;
            n.free = nodes_[body].free & ~(SlotMask{1} << s);
            return push(n);
          }
        }
        break;
      case K::W: {
        // A x.(a | b) & Ainf x. b, sharing the compiled `b`.
        int s = slot(f.var());
        int a = compile(f.lhs());
        int b = compile(f.rhs());
        Block bl;
        bl.exists = false;
        bl.vars = {s};
        std::vector<int> parts;
        auto split = [&](auto&& self, int i) -> void {
          if (nodes_[i].op == Op::Or) {
            self(self, nodes_[i].a);
            self(self, nodes_[i].b);
          } else {
            parts.push_back(i);
          }
        };
        split(split, a);
        split(split, b);
        int univ = finish_block(std::move(bl), parts);
        CNode inf;
        inf.op = Op::ForallInf;
        inf.v1 = s;
        inf.a = b;
        inf.free = nodes_[b].free & ~(SlotMask{1} << s);
        int cof = push(inf);
        return binary(Op::And, univ, cof);
      }
    }
    throw Error("unreachable formula kind");
  }

  PredSet preds_;
  std::vector<CNode> nodes_;
  std::vector<Block> blocks_;
  std::unordered_map<std::string, int> slots_;
  std::vector<std::string> slot_names_;
  std::unordered_map<const void*, int> cache_;
  std::vector<Formula> keep_;  // keeps cached node ids alive
  int root_ = -1;
};

}  // namespace monadic::detail
