#pragma once

#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "monadic/concrete.hpp"
#include "monadic/error.hpp"
#include "monadic/formula_io.hpp"
#include "monadic/profile.hpp"

namespace monadic {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

inline std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

// Non-blank lines with their 1-based line numbers; '#' starts a comment.
inline std::vector<std::pair<std::size_t, std::string>> content_lines(
    std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::size_t no = 0, start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++no;
    std::string_view line = text.substr(start, end - start);
    if (auto h = line.find('#'); h != std::string_view::npos)
      line = line.substr(0, h);
    line = trim(line);
    if (!line.empty()) out.emplace_back(no, std::string(line));
    start = end + 1;
  }
  return out;
}

inline std::string_view after_header(const std::string& line,
                                     std::string_view header, std::size_t no) {
  if (line.rfind(header, 0) != 0)
    throw FormatError("expected '" + std::string(header) + "'", no);
  return std::string_view(line).substr(header.size());
}

inline PredSet preds_line(const std::vector<std::pair<std::size_t, std::string>>& ls) {
  if (ls.empty()) throw FormatError("expected 'preds:'", 1);
  auto names = words(after_header(ls[0].second, "preds:", ls[0].first));
  try {
    return PredSet(names);
  } catch (const InvalidArgument& e) {
    throw FormatError(e.what(), ls[0].first);
  }
}

}  // namespace detail

/// Model text:
///   preds: p q
///   elems:
///   e0: p
///   e1: p q
///   e2:
inline ConcreteModel parse_model(std::string_view text) {
  auto ls = detail::content_lines(text);
  PredSet preds = detail::preds_line(ls);
  if (ls.size() < 2 || detail::trim(detail::after_header(ls[1].second, "elems:",
                                                         ls[1].first)) != "")
    throw FormatError("expected 'elems:'", ls.size() < 2 ? ls[0].first + 1
                                                         : ls[1].first);
  std::set<std::string> ids;
  std::vector<TypeMask> colours;
  for (std::size_t i = 2; i < ls.size(); ++i) {
    const auto& [no, line] = ls[i];
    auto colon = line.find(':');
    if (colon == std::string::npos) throw FormatError("expected 'ID: predicates'", no);
    std::string id(detail::trim(std::string_view(line).substr(0, colon)));
    if (id.empty()) throw FormatError("missing element id", no);
    if (!ids.insert(id).second) throw FormatError("duplicate element id '" + id + "'", no);
    TypeMask c = 0;
    for (const auto& p : detail::words(std::string_view(line).substr(colon + 1))) {
      if (!preds.contains(p)) throw UnknownPredicate(p);
      c |= preds.bit(p);
    }
    colours.push_back(c);
  }
  return ConcreteModel(preds, std::move(colours));
}

inline std::string print_model(const ConcreteModel& m) {
  std::string out = "preds:";
  for (const auto& n : m.preds().names()) out += " " + n;
  out += "\nelems:\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    out += "e" + std::to_string(i) + ":";
    for (const auto& n : m.preds().type_names(m.colour(i))) out += " " + n;
    out += "\n";
  }
  return out;
}

/// Profile text; unlisted types have count 0.
///   preds: p q
///   profile:
///   {p}: 3
///   {p,q}: omega
inline Profile parse_profile(std::string_view text) {
  auto ls = detail::content_lines(text);
  PredSet preds = detail::preds_line(ls);
  if (ls.size() < 2 || detail::trim(detail::after_header(ls[1].second, "profile:",
                                                         ls[1].first)) != "")
    throw FormatError("expected 'profile:'", ls.size() < 2 ? ls[0].first + 1
                                                           : ls[1].first);
  Profile p(preds);
  std::vector<bool> seen(preds.num_types(), false);
  for (std::size_t i = 2; i < ls.size(); ++i) {
    const auto& [no, line] = ls[i];
    std::string_view l(line);
    auto close = l.find('}');
    if (l.empty() || l[0] != '{' || close == std::string_view::npos)
      throw FormatError("malformed type set", no);
    TypeMask s = 0;
    std::string_view inner = detail::trim(l.substr(1, close - 1));
    if (!inner.empty()) {
      std::size_t start = 0;
      while (true) {
        auto comma = inner.find(',', start);
        auto name = detail::trim(inner.substr(
            start, comma == std::string_view::npos ? std::string_view::npos
                                                   : comma - start));
        if (!is_identifier(name)) throw FormatError("malformed type set", no);
        TypeMask bit = preds.bit(name);
        if (s & bit) throw FormatError("malformed type set", no);
        s |= bit;
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
    }
    if (seen[s]) throw FormatError("duplicate type line", no);
    seen[s] = true;
    std::string_view rest = detail::trim(l.substr(close + 1));
    if (rest.empty() || rest[0] != ':') throw FormatError("expected ':'", no);
    std::string value(detail::trim(rest.substr(1)));
    if (value == "omega") {
      p.set(s, kOmega);
    } else {
      if (value.empty() ||
          value.find_first_not_of("0123456789") != std::string::npos ||
          value.size() > 18)
        throw FormatError("expected a count or 'omega'", no);
      p.set(s, Count::fin(std::stoull(value)));
    }
  }
  return p;
}

inline std::string print_profile(const Profile& p) {
  std::string out = "preds:";
  for (const auto& n : p.preds().names()) out += " " + n;
  out += "\nprofile:\n";
  for (TypeMask s = 0; s < p.counts().size(); ++s)
    if (p[s] != Count::fin(0))
      out += p.preds().type_to_string(s) + ": " + p[s].to_string() + "\n";
  return out;
}

}  // namespace monadic
