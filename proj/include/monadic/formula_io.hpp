#pragma once

#include <cctype>
#include <ostream>
#include <string>
#include <string_view>

#include "monadic/error.hpp"
#include "monadic/formula.hpp"
#include "monadic/pred_set.hpp"

namespace monadic {

namespace detail {

class FormulaParser {
 public:
  FormulaParser(std::string_view text, const PredSet* preds)
      : s_(text), preds_(preds) {}

  Formula parse() {
    Formula f = disjunction();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(msg, pos_);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool peek(std::string_view tok) {
    skip_ws();
    return s_.substr(pos_, tok.size()) == tok;
  }

  bool accept(std::string_view tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  static bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  // Reads the maximal run of word characters; empty if none.
  std::string_view word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && word_char(s_[pos_])) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  std::string identifier(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    std::string_view w = word();
    if (!is_identifier(w)) {
      pos_ = start;
      fail(std::string("expected ") + what);
    }
    return std::string(w);
  }

  std::string predicate(std::string name) {
    if (preds_ && !preds_->contains(name)) throw UnknownPredicate(name);
    return name;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (accept("|")) f = Formula::disj(f, conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = unit();
    while (accept("&")) f = Formula::conj(f, unit());
    return f;
  }

  Formula literal_tail(std::string pred, bool positive) {
    expect("(");
    std::string v = identifier("variable");
    expect(")");
    return Formula::lit(predicate(std::move(pred)), std::move(v), positive);
  }

  Formula unit() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (accept("(")) {
      Formula f = disjunction();
      expect(")");
      return f;
    }
    if (peek("!=")) fail("unexpected '!='");
    if (accept("!")) {
      std::string p = identifier("predicate name");
      return literal_tail(std::move(p), false);
    }
    std::size_t start = pos_;
    std::string_view w = word();
    if (w.empty()) fail("unexpected character");
    if (w == "true") return Formula::top();
    if (w == "false") return Formula::bottom();
    if (std::isupper(static_cast<unsigned char>(w[0]))) {
      if (w == "W") {
        std::string v = identifier("variable");
        expect(".");
        expect("(");
        Formula a = disjunction();
        expect(",");
        Formula b = disjunction();
        expect(")");
        return Formula::w(std::move(v), a, b);
      }
      Quantifier q;
      if (w == "E") q = Quantifier::Exists;
      else if (w == "A") q = Quantifier::Forall;
      else if (w == "Einf") q = Quantifier::ExistsInf;
      else if (w == "Ainf") q = Quantifier::ForallInf;
      else {
        pos_ = start;
        fail("unknown keyword '" + std::string(w) + "'");
      }
      std::string v = identifier("variable");
      expect(".");
      return Formula::quant(q, std::move(v), disjunction());
    }
    if (!is_identifier(w)) {
      pos_ = start;
      fail("invalid identifier");
    }
    std::string name(w);
    if (peek("(")) return literal_tail(std::move(name), true);
    if (accept("!=")) return Formula::eq(name, identifier("variable"), false);
    if (accept("=")) return Formula::eq(name, identifier("variable"), true);
    fail("expected '(', '=' or '!='");
  }

  std::string_view s_;
  const PredSet* preds_;
  std::size_t pos_ = 0;
};

inline const char* keyword(Quantifier q) {
  switch (q) {
    case Quantifier::Exists: return "E";
    case Quantifier::Forall: return "A";
    case Quantifier::ExistsInf: return "Einf";
    case Quantifier::ForallInf: return "Ainf";
  }
  return "?";
}

// `followed` means more text follows on the right at the same nesting level,
// so a quantifier (whose body extends maximally) must be parenthesised.
inline void print_disj(const Formula& f, bool followed, std::string& out);
inline void print_conj(const Formula& f, bool followed, std::string& out);

inline void print_unit(const Formula& f, bool followed, std::string& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Top: out += "true"; return;
    case K::Bottom: out += "false"; return;
    case K::Lit:
      if (!f.positive()) out += "!";
      out += f.pred() + "(" + f.var() + ")";
      return;
    case K::Eq:
      out += f.var() + (f.positive() ? " = " : " != ") + f.var2();
      return;
    case K::And:
    case K::Or:
      out += "(";
      print_disj(f, false, out);
      out += ")";
      return;
    case K::Quant:
      if (followed) out += "(";
      out += keyword(f.quantifier());
      out += " " + f.var() + ". ";
      print_disj(f.body(), false, out);
      if (followed) out += ")";
      return;
    case K::W:
      out += "W " + f.var() + ". (";
      print_disj(f.lhs(), false, out);
      out += ", ";
      print_disj(f.rhs(), false, out);
      out += ")";
      return;
  }
}

inline void print_conj(const Formula& f, bool followed, std::string& out) {
  if (f.is(Formula::Kind::And)) {
    print_conj(f.lhs(), true, out);
    out += " & ";
    print_unit(f.rhs(), followed, out);
  } else {
    print_unit(f, followed, out);
  }
}

inline void print_disj(const Formula& f, bool followed, std::string& out) {
  if (f.is(Formula::Kind::Or)) {
    print_disj(f.lhs(), true, out);
    out += " | ";
    print_conj(f.rhs(), followed, out);
  } else {
    print_conj(f, followed, out);
  }
}

}  // namespace detail

/// Parses formula text. Predicates are checked against `preds`.
inline Formula parse_formula(std::string_view text, const PredSet& preds) {
  return detail::FormulaParser(text, &preds).parse();
}

/// Parses formula text without checking predicate names.
inline Formula parse_formula(std::string_view text) {
  return detail::FormulaParser(text, nullptr).parse();
}

/// Canonical text with the fewest parentheses that parse back to the same
/// tree.
inline std::string print_formula(const Formula& f) {
  std::string out;
  detail::print_disj(f, false, out);
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Formula& f) {
  return os << print_formula(f);
}

}  // namespace monadic
