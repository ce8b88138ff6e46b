#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "monadic/concrete.hpp"
#include "monadic/error.hpp"

namespace monadic {

enum class Player { Spoiler, Duplicator };

inline const char* to_string(Player p) {
  return p == Player::Duplicator ? "duplicator" : "spoiler";
}

struct EfOptions {
  bool memoize = true;
  /// Maximum number of positions searched.
  std::uint64_t cap = kDefaultCap;
};

namespace detail {

// k-round game with equality: after every round the picked pairs must form a
// colour-preserving partial bijection.
class EfSolver {
 public:
  EfSolver(const ConcreteModel& m0, const ConcreteModel& m1, const EfOptions& o)
      : m_{&m0, &m1}, opt_(o) {}

  bool duplicator_wins(std::size_t rounds) { return wins(rounds); }

 private:
  using Pair = std::pair<std::size_t, std::size_t>;

  // Positions are determined up to isomorphism by the colours of the
  // distinct picked pairs.
  std::vector<TypeMask> shape() const {
    std::vector<TypeMask> cs;
    for (const auto& [a, b] : picked_) cs.push_back(m_[0]->colour(a));
    std::sort(cs.begin(), cs.end());
    return cs;
  }

  bool extends(std::size_t a, std::size_t b) const {
    if (m_[0]->colour(a) != m_[1]->colour(b)) return false;
    for (const auto& [x, y] : picked_)
      if ((x == a) != (y == b)) return false;
    return true;
  }

  bool known(std::size_t a) const {
    for (const auto& [x, y] : picked_)
      if (x == a) return true;
    return false;
  }

  bool wins(std::size_t rounds) {
    if (rounds == 0) return true;
    std::pair<std::size_t, std::vector<TypeMask>> key;
    if (opt_.memoize) {
      key = {rounds, shape()};
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    if (++positions_ > opt_.cap)
      throw CapExceeded("ef_winner positions", positions_, opt_.cap);
    bool result = true;
    for (int side = 0; side < 2 && result; ++side) {
      const ConcreteModel& here = *m_[side];
      const ConcreteModel& there = *m_[1 - side];
      for (std::size_t d = 0; d < here.size() && result; ++d) {
        bool answered = false;
        for (std::size_t e = 0; e < there.size() && !answered; ++e) {
          std::size_t a = side == 0 ? d : e, b = side == 0 ? e : d;
          if (!extends(a, b)) continue;
          bool fresh = !known(a);
          if (fresh) picked_.emplace_back(a, b);
          answered = wins(rounds - 1);
          if (fresh) picked_.pop_back();
        }
        result = answered;
      }
    }
    if (opt_.memoize) memo_.emplace(std::move(key), result);
    return result;
  }

  const ConcreteModel* m_[2];
  EfOptions opt_;
  std::vector<Pair> picked_;  // distinct pairs only
  std::uint64_t positions_ = 0;
  std::map<std::pair<std::size_t, std::vector<TypeMask>>, bool> memo_;
};

}  // namespace detail

/// Winner of the k-round Ehrenfeucht-Fraisse game with equality.
inline Player ef_winner(const ConcreteModel& m0, const ConcreteModel& m1,
                        std::size_t k, const EfOptions& opt = {}) {
  if (!(m0.preds() == m1.preds()))
    throw InvalidArgument("models use different predicate sets");
  detail::EfSolver s(m0, m1, opt);
  return s.duplicator_wins(k) ? Player::Duplicator : Player::Spoiler;
}

}  // namespace monadic
