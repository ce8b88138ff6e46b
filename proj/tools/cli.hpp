#pragma once

// Command-line front end. `run` is separate from main so tests can drive it.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "monadic/json.hpp"
#include "monadic/monadic.hpp"

namespace monadic::cli {

enum Exit { kYes = 0, kNo = 1, kError = 2 };

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A formula argument is literal text, or @FILE.
inline std::string formula_text(const std::string& arg) {
  return !arg.empty() && arg[0] == '@' ? read_file(arg.substr(1)) : arg;
}

inline std::set<std::string> name_set(const std::string& list) {
  PredSet p = PredSet::parse_list(list);
  return {p.names().begin(), p.names().end()};
}

struct Common {
  std::string preds;
  std::string dialect;
  std::string b;
};

// Predicates: --preds if given, otherwise those used by the formulas plus B.
inline PredSet resolve_preds(const Common& c, const std::vector<Formula>& fs) {
  if (!c.preds.empty()) return PredSet::parse_list(c.preds);
  std::set<std::string> names = name_set(c.b);
  for (const auto& f : fs)
    for (const auto& p : predicates_of(f)) names.insert(p);
  return PredSet(std::vector<std::string>(names.begin(), names.end()));
}

inline std::vector<Formula> parse_all(const std::vector<std::string>& args,
                                      const Common& c) {
  std::optional<PredSet> given;
  if (!c.preds.empty()) given = PredSet::parse_list(c.preds);
  std::vector<Formula> out;
  for (const auto& a : args) {
    std::string text = formula_text(a);
    out.push_back(given ? parse_formula(text, *given) : parse_formula(text));
  }
  return out;
}

inline Dialect resolve_dialect(const Common& c, const std::vector<Formula>& fs) {
  if (!c.dialect.empty()) return dialect_from_string(c.dialect);
  Dialect d = Dialect::M;
  for (const auto& f : fs)
    d = std::max(d, infer_dialect(f), [](Dialect x, Dialect y) {
      return static_cast<int>(x) < static_cast<int>(y);
    });
  return d;
}

inline void check_b(const PredSet& preds, const std::set<std::string>& b) {
  for (const auto& p : b)
    if (!preds.contains(p)) throw UnknownPredicate(p);
}

}  // namespace detail

/// Runs one command. Returns 0 for yes/true, 1 for no/false, 2 on error.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Monadic first-order logic with infinity quantifiers"};
  app.require_subcommand(1);
  std::uint64_t cap = kDefaultCap;
  app.add_option("--cap", cap, "Cap on enumerations and searches");

  detail::Common common;
  auto add_common = [&](CLI::App* sub, bool dialect, bool b) {
    sub->add_option("--preds", common.preds, "Predicates, comma-separated");
    if (dialect) sub->add_option("--dialect", common.dialect, "m, foe or foei");
    if (b) sub->add_option("--b", common.b, "Predicate subset B, comma-separated");
  };

  std::vector<std::string> formulas;
  bool json = false, certificate = false, positive = false;
  std::string mode, prop, model_file, profile_file, model0, model1;
  std::size_t rank = 0;

  auto* parse = app.add_subcommand("parse", "Parse and print a formula");
  add_common(parse, false, false);
  parse->add_option("formula", formulas, "Formula or @FILE")->required()->expected(1);

  auto* nf = app.add_subcommand("nf", "Basic normal form");
  add_common(nf, true, false);
  nf->add_flag("--json", json, "Print the disjuncts as JSON");
  bool strengthen = false;
  nf->add_flag("--strengthen", strengthen, "Add infinite types to the bound (foei)");
  nf->add_option("formula", formulas, "Sentence or @FILE")->required()->expected(1);

  auto* tr = app.add_subcommand("translate", "Translate into a fragment");
  add_common(tr, true, true);
  tr->add_option("--mode", mode, "monotone, continuous, universal or quotient")
      ->required()
      ->check(CLI::IsMember({"monotone", "continuous", "universal", "quotient"}));
  tr->add_flag("--positive", positive, "Positive quotient translation");
  tr->add_option("formula", formulas, "Sentence or @FILE")->required()->expected(1);

  auto* dec = app.add_subcommand("decide", "Decide a semantic property");
  add_common(dec, true, true);
  dec->add_option("--prop", prop, "monotone, continuous, submodels or quotient")
      ->required()
      ->check(CLI::IsMember({"monotone", "continuous", "submodels", "quotient"}));
  dec->add_flag("--certificate", certificate, "Print the witness or counterexample");
  dec->add_flag("--json", json, "Print the verdict as JSON");
  dec->add_option("formula", formulas, "Sentence or @FILE")->required()->expected(1);

  auto* sat = app.add_subcommand("sat", "Satisfiability");
  add_common(sat, true, false);
  sat->add_flag("--certificate", certificate, "Print a satisfying class");
  sat->add_option("formula", formulas, "Sentence or @FILE")->required()->expected(1);

  auto* eqv = app.add_subcommand("equiv", "Equivalence of two sentences");
  add_common(eqv, true, false);
  eqv->add_flag("--certificate", certificate, "Print a distinguishing class");
  eqv->add_option("formulas", formulas, "Two sentences or @FILEs")
      ->required()
      ->expected(2);

  auto* ev = app.add_subcommand("eval", "Evaluate a sentence on a model or profile");
  auto* mopt = ev->add_option("--model", model_file, "Model file");
  auto* popt = ev->add_option("--profile", profile_file, "Profile file");
  mopt->excludes(popt);
  ev->add_option("formula", formulas, "Sentence or @FILE")->required()->expected(1);

  auto* ef = app.add_subcommand("ef", "Ehrenfeucht-Fraisse game winner");
  ef->add_option("--model0", model0, "First model file")->required();
  ef->add_option("--model1", model1, "Second model file")->required();
  ef->add_option("--rank", rank, "Number of rounds")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kYes;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kYes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }

  try {
    auto say = [&](bool v, const char* yes, const char* no) {
      out << (v ? yes : no) << "\n";
      return v ? kYes : kNo;
    };

    if (*parse) {
      auto fs = detail::parse_all(formulas, common);
      out << print_formula(fs[0]) << "\n";
      return kYes;
    }
    if (*ev) {
      if (model_file.empty() && profile_file.empty())
        throw InvalidArgument("eval needs --model or --profile");
      Formula f = parse_formula(detail::formula_text(formulas[0]));
      if (!model_file.empty()) {
        ConcreteModel m = parse_model(detail::read_file(model_file));
        require_predicates(f, m.preds());
        return say(eval_concrete(m, f), "true", "false");
      }
      Profile p = parse_profile(detail::read_file(profile_file));
      require_predicates(f, p.preds());
      return say(eval_abstract(p, f), "true", "false");
    }
    if (*ef) {
      ConcreteModel m0 = parse_model(detail::read_file(model0));
      ConcreteModel m1 = parse_model(detail::read_file(model1));
      EfOptions o;
      o.cap = cap;
      Player w = ef_winner(m0, m1, rank, o);
      out << to_string(w) << "\n";
      return w == Player::Duplicator ? kYes : kNo;
    }

    auto fs = detail::parse_all(formulas, common);
    PredSet preds = detail::resolve_preds(common, fs);
    for (const auto& f : fs) require_predicates(f, preds);
    Dialect d = detail::resolve_dialect(common, fs);
    std::set<std::string> b = detail::name_set(common.b);
    detail::check_b(preds, b);

    if (*nf) {
      NormalForm n = basic_nf(fs[0], preds, d, cap);
      if (strengthen) n = strengthen_nf(std::move(n));
      if (json) out << to_json(n).dump() << "\n";
      else out << print_formula(nf_to_formula(n)) << "\n";
      return kYes;
    }
    if (*tr) {
      // Continuity of an FOE sentence is a question about FOEI models.
      if (mode == "continuous" && common.dialect.empty() && d == Dialect::FOE)
        d = Dialect::FOEI;
      Formula r;
      if (mode == "monotone") r = translate_monotone(fs[0], preds, b, d, cap);
      else if (mode == "continuous") r = translate_continuous(fs[0], preds, b, d, cap);
      else if (mode == "universal") r = translate_universal(fs[0], preds, d, cap);
      else {
        if (d == Dialect::M && common.dialect.empty()) d = Dialect::FOE;
        std::optional<std::set<std::string>> cont;
        if (positive && !b.empty()) cont = b;
        r = translate_quotient(fs[0], preds, d, positive, cont, cap);
      }
      out << print_formula(r) << "\n";
      return kYes;
    }
    if (*dec) {
      PropertyQuery q = prop == "monotone"     ? PropertyQuery::monotone_in(b)
                        : prop == "continuous" ? PropertyQuery::continuous_in(b)
                        : prop == "submodels"  ? PropertyQuery::submodels()
                                               : PropertyQuery::quotients();
      if ((prop == "monotone" || prop == "continuous") && b.empty())
        throw InvalidArgument("--prop " + prop + " needs --b");
      Verdict v = decide_property(fs[0], preds, q, d, cap);
      if (json) {
        nlohmann::json j = {{"verdict", v.holds ? "yes" : "no"},
                            {"dialect", to_string(v.decided_in)}};
        if (v.witness) j["certificate"] = print_formula(*v.witness);
        if (v.counterexample) j["counterexample"] = to_json(*v.counterexample);
        out << j.dump() << "\n";
        return v.holds ? kYes : kNo;
      }
      out << (v.holds ? "yes" : "no") << "\n";
      if (certificate) {
        if (v.witness) out << print_formula(*v.witness) << "\n";
        if (v.counterexample)
          out << "counterexample: " << v.counterexample->to_string() << "\n";
      }
      return v.holds ? kYes : kNo;
    }
    if (*sat) {
      auto c = satisfying_class(fs[0], preds, d, cap);
      out << (c ? "yes" : "no") << "\n";
      if (certificate && c) out << print_profile(representative_of(*c));
      return c ? kYes : kNo;
    }
    if (*eqv) {
      auto c = distinguishing_class(fs[0], fs[1], preds, d, cap);
      out << (c ? "no" : "yes") << "\n";
      if (certificate && c) out << print_profile(representative_of(*c));
      return c ? kNo : kYes;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  err << "error: no command\n";
  return kError;
}

}  // namespace monadic::cli
