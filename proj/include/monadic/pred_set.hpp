#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monadic/error.hpp"

namespace monadic {

/// A type S is a subset of the predicate set, stored as a bitmask: bit i is
/// the i-th predicate in lexicographic order.
using TypeMask = std::uint32_t;

inline constexpr std::size_t kMaxPredicates = 16;

/// True when `s` matches [a-z][a-zA-Z0-9_]* and is not a reserved word.
inline bool is_identifier(std::string_view s) {
  if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
  for (char c : s) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return s != "true" && s != "false";
}

/// Finite, lexicographically ordered set of unary predicate names.
/// Copies share the underlying storage.
class PredSet {
 public:
  PredSet() : names_(std::make_shared<const std::vector<std::string>>()) {}

  explicit PredSet(std::vector<std::string> names) {
    std::sort(names.begin(), names.end());
    if (std::adjacent_find(names.begin(), names.end()) != names.end())
      throw InvalidArgument("duplicate predicate in predicate set");
    if (names.size() > kMaxPredicates)
      throw InvalidArgument("at most " + std::to_string(kMaxPredicates) +
                            " predicates are supported");
    for (const auto& n : names)
      if (!is_identifier(n))
        throw InvalidArgument("invalid predicate name '" + n + "'");
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
  }

  PredSet(std::initializer_list<std::string> names)
      : PredSet(std::vector<std::string>(names)) {}

  std::size_t size() const { return names_->size(); }
  bool empty() const { return names_->empty(); }
  const std::vector<std::string>& names() const { return *names_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    auto it = std::lower_bound(names_->begin(), names_->end(), name);
    if (it == names_->end() || *it != name) return std::nullopt;
    return static_cast<std::size_t>(it - names_->begin());
  }
  bool contains(std::string_view name) const {
    return index_of(name).has_value();
  }

  /// Singleton type {name}; throws UnknownPredicate.
  TypeMask bit(std::string_view name) const {
    auto i = index_of(name);
    if (!i) throw UnknownPredicate(std::string(name));
    return TypeMask{1} << *i;
  }

  TypeMask full() const {
    return static_cast<TypeMask>((std::uint64_t{1} << size()) - 1);
  }
  std::size_t num_types() const { return std::size_t{1} << size(); }

  std::vector<std::string> type_names(TypeMask s) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < size(); ++i)
      if (s & (TypeMask{1} << i)) out.push_back((*names_)[i]);
    return out;
  }

  template <class Range>
  TypeMask mask_of(const Range& names) const {
    TypeMask m = 0;
    for (const auto& n : names) m |= bit(n);
    return m;
  }

  /// Renders a type as "{p,q}".
  std::string type_to_string(TypeMask s) const {
    std::string out = "{";
    bool first = true;
    for (const auto& n : type_names(s)) {
      if (!first) out += ",";
      out += n;
      first = false;
    }
    return out + "}";
  }

  /// Comma-separated list, as accepted by `parse_list`.
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) out += ",";
      out += (*names_)[i];
    }
    return out;
  }

  /// Parses "p,q,r" (whitespace around names is ignored; empty string gives
  /// the empty set).
  static PredSet parse_list(std::string_view text) {
    std::vector<std::string> names;
    std::size_t start = 0;
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
      return s;
    };
    if (trim(text).empty()) return PredSet();
    while (true) {
      auto pos = text.find(',', start);
      auto piece = trim(text.substr(start, pos == std::string_view::npos
                                               ? std::string_view::npos
                                               : pos - start));
      names.emplace_back(piece);
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
    return PredSet(std::move(names));
  }

  bool is_subset_of(const PredSet& other) const {
    return std::all_of(names_->begin(), names_->end(),
                       [&](const std::string& n) { return other.contains(n); });
  }

  friend bool operator==(const PredSet& a, const PredSet& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

inline int popcount(TypeMask m) { return __builtin_popcount(m); }

}  // namespace monadic
