#include <gtest/gtest.h>

#include "monadic/monadic.hpp"
#include "support/corpus.hpp"

using namespace monadic;

namespace {
const PredSet kPQ{"p", "q"};
}

TEST(ParseFormula, QuantifierScopeIsMaximal) {
  Formula f = parse_formula("E x. p(x) & !q(x)", kPQ);
  EXPECT_EQ(f, Formula::exists("x", Formula::conj(Formula::lit("p", "x"),
                                                  Formula::lit("q", "x", false))));
}

TEST(ParseFormula, InfinityAndEquality) {
  Formula f = parse_formula("Einf x. (p(x) | x != y)", kPQ);
  EXPECT_EQ(f, Formula::exists_inf("x", Formula::disj(Formula::lit("p", "x"),
                                                      Formula::eq("x", "y", false))));
}

TEST(ParseFormula, ConnectivesAssociateLeft) {
  Formula a = Formula::lit("p", "x"), b = Formula::lit("q", "x"),
          c = Formula::lit("p", "y");
  EXPECT_EQ(parse_formula("p(x) & q(x) & p(y)", kPQ),
            Formula::conj(Formula::conj(a, b), c));
  EXPECT_EQ(parse_formula("p(x) & q(x) | p(y)", kPQ),
            Formula::disj(Formula::conj(a, b), c));
  EXPECT_EQ(parse_formula("p(x) | q(x) & p(y)", kPQ),
            Formula::disj(a, Formula::conj(b, c)));
}

TEST(ParseFormula, WForm) {
  Formula f = parse_formula("W z. (x = z | p(z), q(z))", kPQ);
  ASSERT_TRUE(f.is(Formula::Kind::W));
  EXPECT_EQ(f.var(), "z");
  EXPECT_EQ(f.rhs(), Formula::lit("q", "z"));
}

TEST(ParseFormula, SyntaxErrors) {
  try {
    parse_formula("E x. p(x", kPQ);
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 8u);  // where ')' is missing
  }
  EXPECT_THROW(parse_formula("p(x) &", kPQ), SyntaxError);
  EXPECT_THROW(parse_formula("Ex x. p(x)", kPQ), SyntaxError);
  EXPECT_THROW(parse_formula("E X. p(X)", kPQ), SyntaxError);
  EXPECT_THROW(parse_formula("p(x) q(x)", kPQ), SyntaxError);
  EXPECT_THROW(parse_formula("!x = y", kPQ), SyntaxError);
  EXPECT_THROW(parse_formula("W x. (p(x))", kPQ), SyntaxError);
  try {
    parse_formula("(p(x) & ?", kPQ);
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 8u);
  }
}

TEST(ParseFormula, UnknownPredicate) {
  EXPECT_THROW(parse_formula("E x. r(x)", kPQ), UnknownPredicate);
  EXPECT_NO_THROW(parse_formula("E x. r(x)"));
}

TEST(PrintFormula, Examples) {
  EXPECT_EQ(print_formula(Formula::forall("x", Formula::bottom())), "A x. false");
  Formula a = Formula::lit("a", "x"), b = Formula::lit("b", "x"),
          c = Formula::lit("c", "x");
  EXPECT_EQ(print_formula(Formula::disj(Formula::conj(a, b), c)),
            "a(x) & b(x) | c(x)");
  EXPECT_EQ(print_formula(Formula::conj(Formula::disj(a, b), c)),
            "(a(x) | b(x)) & c(x)");
  EXPECT_EQ(print_formula(Formula::conj(a, Formula::conj(b, c))),
            "a(x) & (b(x) & c(x))");
  EXPECT_EQ(print_formula(Formula::conj(Formula::exists("x", a), b)),
            "(E x. a(x)) & b(x)");
  EXPECT_EQ(print_formula(Formula::conj(b, Formula::exists("x", a))),
            "b(x) & E x. a(x)");
  EXPECT_EQ(print_formula(Formula::eq("x", "y", false)), "x != y");
}

TEST(PrintFormula, RoundTripOnCorpus) {
  for (Dialect d : {Dialect::M, Dialect::FOE, Dialect::FOEI}) {
    corpus::Options o;
    o.preds = kPQ;
    o.dialect = d;
    o.max_rank = 3;
    o.max_depth = 6;
    for (const auto& f : corpus::sentences(o, 300, 5)) {
      std::string s = print_formula(f);
      EXPECT_EQ(parse_formula(s, kPQ), f) << s;
    }
  }
}

TEST(ParseModel, Examples) {
  ConcreteModel m = parse_model("preds: p q\nelems:\ne0: p\ne1: p q\ne2:");
  EXPECT_EQ(m.preds(), kPQ);
  EXPECT_EQ(m.colours(), (std::vector<TypeMask>{1, 3, 0}));
  ConcreteModel e = parse_model("preds: p\nelems:");
  EXPECT_EQ(e.size(), 0u);
  EXPECT_THROW(parse_model("preds: p\nelems:\ne0: q"), UnknownPredicate);
  EXPECT_THROW(parse_model("preds: p\nelems:\ne0: p\ne0:"), FormatError);
  EXPECT_THROW(parse_model("preds: p\n"), FormatError);
  EXPECT_THROW(parse_model("elems:\n"), FormatError);
}

TEST(ParseModel, RoundTrip) {
  for (const auto& m : enumerate_models(kPQ, 3))
    EXPECT_EQ(parse_model(print_model(m)), m);
}

TEST(ParseProfile, Examples) {
  PredSet p{"p"};
  Profile a = parse_profile("preds: p\nprofile:\n{p}: omega\n{}: 3");
  EXPECT_EQ(a[1], kOmega);
  EXPECT_EQ(a[0], Count::fin(3));
  EXPECT_TRUE(parse_profile("preds: p\nprofile:").is_empty());
  EXPECT_THROW(parse_profile("preds: p\nprofile:\n{p}: 2\n{p}: 1"), FormatError);
  EXPECT_THROW(parse_profile("preds: p\nprofile:\np: 2"), FormatError);
  EXPECT_THROW(parse_profile("preds: p\nprofile:\n{p,p}: 2"), FormatError);
  EXPECT_THROW(parse_profile("preds: p\nprofile:\n{q}: 2"), UnknownPredicate);
  EXPECT_THROW(parse_profile("preds: p\nprofile:\n{p}: lots"), FormatError);
  Profile b = parse_profile("preds: p q\nprofile:\n{ q , p }: 4\n");
  EXPECT_EQ(b[3], Count::fin(4));
}

TEST(ParseProfile, RoundTrip) {
  std::vector<Count> vals{Count::fin(0), Count::fin(2), kOmega};
  for (const auto& p : enumerate_profiles(kPQ, vals))
    EXPECT_EQ(parse_profile(print_profile(p)), p);
}
