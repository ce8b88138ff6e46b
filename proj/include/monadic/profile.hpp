#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "monadic/concrete.hpp"
#include "monadic/error.hpp"
#include "monadic/pred_set.hpp"

namespace monadic {

/// Cardinality: a natural number or omega (countably infinite).
class Count {
 public:
  constexpr Count() = default;
  static constexpr Count fin(std::uint64_t n) { return Count(n); }
  static constexpr Count omega() { return Count(kOmega); }

  constexpr bool is_omega() const { return v_ == kOmega; }
  constexpr bool is_finite() const { return v_ != kOmega; }
  /// Finite value; meaningless for omega.
  constexpr std::uint64_t value() const { return v_; }

  /// Saturating subtraction; omega minus anything finite stays omega.
  constexpr Count minus(std::uint64_t n) const {
    if (is_omega()) return *this;
    return Count(v_ > n ? v_ - n : 0);
  }
  constexpr bool at_least(std::uint64_t n) const { return is_omega() || v_ >= n; }

  std::string to_string() const {
    return is_omega() ? "omega" : std::to_string(v_);
  }

  friend constexpr auto operator<=>(const Count&, const Count&) = default;

 private:
  static constexpr std::uint64_t kOmega = std::numeric_limits<std::uint64_t>::max();
  constexpr explicit Count(std::uint64_t v) : v_(v) {}
  std::uint64_t v_ = 0;
};

inline constexpr Count kOmega = Count::omega();

/// Abstraction of a model by the number of elements of each type, indexed by
/// type mask.
class Profile {
 public:
  Profile() : counts_(1) {}
  explicit Profile(PredSet preds)
      : preds_(std::move(preds)), counts_(preds_.num_types()) {}
  Profile(PredSet preds, std::vector<Count> counts)
      : preds_(std::move(preds)), counts_(std::move(counts)) {
    if (counts_.size() != preds_.num_types())
      throw InvalidArgument("profile needs one count per type");
  }

  const PredSet& preds() const { return preds_; }
  const std::vector<Count>& counts() const { return counts_; }
  Count operator[](TypeMask s) const { return counts_.at(s); }
  void set(TypeMask s, Count c) { counts_.at(s) = c; }

  bool is_finite() const {
    for (Count c : counts_)
      if (c.is_omega()) return false;
    return true;
  }
  bool is_empty() const {
    for (Count c : counts_)
      if (c != Count::fin(0)) return false;
    return true;
  }

  friend bool operator==(const Profile& a, const Profile& b) {
    return a.preds_ == b.preds_ && a.counts_ == b.counts_;
  }

 private:
  PredSet preds_;
  std::vector<Count> counts_;
};

inline Profile profile_of(const ConcreteModel& m) {
  Profile p(m.preds());
  std::vector<std::uint64_t> n(m.preds().num_types(), 0);
  for (TypeMask c : m.colours()) ++n[c];
  for (TypeMask s = 0; s < n.size(); ++s) p.set(s, Count::fin(n[s]));
  return p;
}

/// Canonical model of a finite profile: elements grouped by type in mask
/// order.
inline ConcreteModel realize(const Profile& p) {
  std::vector<TypeMask> cs;
  for (TypeMask s = 0; s < p.counts().size(); ++s) {
    if (p[s].is_omega())
      throw InvalidArgument("cannot realize a profile with an infinite count");
    cs.insert(cs.end(), p[s].value(), s);
  }
  return ConcreteModel(p.preds(), std::move(cs));
}

/// Product with an infinite set: every nonzero count becomes omega.
inline Profile omega_product(const Profile& p) {
  Profile out = p;
  for (TypeMask s = 0; s < p.counts().size(); ++s)
    if (p[s] != Count::fin(0)) out.set(s, kOmega);
  return out;
}

/// All profiles over `preds` where each count is one of `values`, in
/// lexicographic order of count vectors (type mask 0 varies slowest).
inline std::vector<Profile> enumerate_profiles(const PredSet& preds,
                                               const std::vector<Count>& values,
                                               std::uint64_t cap = kDefaultCap) {
  const std::size_t t = preds.num_types();
  detail::check_cap("enumerate_profiles",
                    detail::ipow(static_cast<long double>(values.size()), t), cap);
  std::vector<Profile> out;
  if (values.empty()) return out;
  std::vector<std::size_t> idx(t, 0);
  while (true) {
    std::vector<Count> cs(t);
    for (std::size_t i = 0; i < t; ++i) cs[i] = values[idx[i]];
    out.emplace_back(preds, std::move(cs));
    std::size_t i = t;
    while (i > 0 && ++idx[i - 1] == values.size()) idx[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

}  // namespace monadic
