#include <gtest/gtest.h>

#include "monadic/monadic.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace monadic;

namespace {

const PredSet kP{"p"};
const PredSet kPQ{"p", "q"};

Formula F(const std::string& s, const PredSet& ps = kP) { return parse_formula(s, ps); }

std::vector<Formula> corpus_of(const PredSet& ps, Dialect d, std::size_t rank,
                               std::size_t n, std::uint32_t seed,
                               corpus::Shape shape = corpus::Shape::Any,
                               std::set<std::string> b = {}) {
  corpus::Options o;
  o.preds = ps;
  o.dialect = d;
  o.max_rank = rank;
  o.shape = shape;
  o.b = std::move(b);
  return corpus::sentences(o, n, seed);
}

const std::vector<Dialect> kAll{Dialect::M, Dialect::FOE, Dialect::FOEI};

}  // namespace

TEST(TypeFormula, Renderings) {
  EXPECT_EQ(type_formula(kPQ, 1, "x"), F("p(x) & !q(x)", kPQ));
  EXPECT_EQ(type_formula(kPQ, 1, "x", TypeRendering::upward(kPQ.bit("q"))), F("p(x)", kPQ));
  EXPECT_EQ(type_formula(kPQ, 0, "x", TypeRendering::upward(kPQ.bit("q"))), F("!p(x)", kPQ));
  EXPECT_EQ(type_formula(kPQ, 2, "x", TypeRendering::positive()), F("q(x)", kPQ));
  EXPECT_EQ(type_formula(kPQ, 0, "x", TypeRendering::positive()), Formula::top());
  EXPECT_EQ(type_formula(kPQ, 2, "x", TypeRendering::upward(0)), type_formula(kPQ, 2, "x"));
}

TEST(TranslateMonotone, Examples) {
  Formula nabla = F("(E x. p(x)) & A x. p(x)");
  EXPECT_EQ(translate_monotone(nabla, kP, {"p"}, Dialect::M), nabla);
  EXPECT_FALSE(are_equivalent(F("E x. !p(x)"), translate_monotone(F("E x. !p(x)"), kP, {"p"},
                                                                  Dialect::M),
                              kP, Dialect::M));
}

TEST(TranslateMonotone, PositiveInputIsFixed) {
  for (Dialect d : kAll)
    for (const auto& f : corpus_of(kPQ, d, 2, 40, 70, corpus::Shape::PositiveIn, {"p"})) {
      ASSERT_TRUE(check_fragment(f, FragmentSpec::positive_in({"p"})));
      EXPECT_TRUE(are_equivalent(f, translate_monotone(f, kPQ, {"p"}, d), kPQ, d))
          << print_formula(f);
    }
}

TEST(TranslateContinuous, Examples) {
  // a single infinite p-type: the disjunct collapses
  EXPECT_EQ(translate_continuous(F("(Einf x. p(x)) & A x. p(x)"), kP, {"p"}, Dialect::FOEI),
            Formula::bottom());
  EXPECT_EQ(continuous_disjunct(kP, Dialect::FOEI, Disjunct{{1}, {1}, {1}}, 1),
            Formula::bottom());
  // M: Sigma = {{}, {p}}; the bound only keeps the type disjoint from p
  EXPECT_EQ(continuous_disjunct(kP, Dialect::M, Disjunct{{}, {}, {0, 1}}, 1),
            F("(E x. true) & (E x. p(x)) & A x. true"));
  EXPECT_EQ(continuous_disjunct(kPQ, Dialect::M, Disjunct{{}, {}, {1, 2}}, 1),
            Formula::conj_all({Formula::exists("x", F("p(x) & !q(x)", kPQ)),
                               F("E x. q(x)", kPQ), F("A x. q(x)", kPQ)}));
  EXPECT_THROW(translate_continuous(F("E x. p(x)"), kP, {"p"}, Dialect::FOE), DialectError);
}

TEST(TranslateContinuous, FoeiShapeUsesW) {
  Formula t = continuous_disjunct(kPQ, Dialect::FOEI, Disjunct{{1, 2}, {1}, {2}}, 1);
  EXPECT_EQ(t, F("(E x0. E x1. x0 != x1 & (p(x0) & !q(x0)) & q(x1) & "
                 "W z. (x0 = x1 | x0 = z | x1 = z | p(z) & !q(z) | q(z), q(z))) & "
                 "Einf y. q(y)",
                 kPQ));
  EXPECT_TRUE(check_fragment(t, FragmentSpec::continuous_in({"p"})));
}

TEST(TranslateUniversal, Examples) {
  // exactly one element, of type {p}: its submodels have at most one element
  Formula one_p = F("E x0. p(x0) & A z. x0 = z | false");
  Formula down = F("(A z. p(z)) & A x0. A x1. x0 = x1 | !p(x0) | !p(x1)");
  EXPECT_EQ(translate_universal(one_p, kP, Dialect::FOE), down);
  EXPECT_EQ(universal_disjunct(kP, Dialect::FOE, Disjunct{{1}, {}, {}}), down);
  EXPECT_EQ(universal_disjunct(kP, Dialect::FOEI, Disjunct{{1}, {}, {}}),
            Formula::conj(down, F("Ainf z. false")));
  // types in the bound are not capped
  EXPECT_EQ(universal_disjunct(kP, Dialect::FOE, Disjunct{{1, 1}, {1}, {}}), F("A z. p(z)"));
  EXPECT_EQ(universal_disjunct(kP, Dialect::FOEI, Disjunct{{0, 1}, {0, 1}, {1}}),
            F("(A z. !p(z) | p(z)) & Ainf z. p(z)"));
  EXPECT_EQ(universal_disjunct(kP, Dialect::M, Disjunct{{}, {}, {0}}), F("A z. !p(z)"));
  EXPECT_FALSE(are_equivalent(F("E x. p(x)"), translate_universal(F("E x. p(x)"), kP, Dialect::M),
                              kP, Dialect::M));
  EXPECT_TRUE(are_equivalent(F("A x. p(x)"), translate_universal(F("A x. p(x)"), kP, Dialect::M),
                             kP, Dialect::M));
  Formula one = F("A x. A y. x = y");
  EXPECT_TRUE(are_equivalent(one, translate_universal(one, kP, Dialect::FOE), kP, Dialect::FOE));
}

TEST(TranslateUniversal, IsDownwardClosure) {
  // The translation holds exactly in the submodels of models of the sentence.
  // At rank 2 a model above m can be shrunk to at most count+2 per type.
  auto models = enumerate_models(kP, 4);
  auto above = enumerate_profiles(kP, oracle::counts_upto(6, false));
  for (const auto& f : corpus_of(kP, Dialect::FOE, 2, 40, 71)) {
    ConcreteFormula cf(f, kP), uf(translate_universal(f, kP, Dialect::FOE), kP);
    std::vector<Profile> sat;
    for (const auto& n : above)
      if (cf.eval(realize(n))) sat.push_back(n);
    for (const auto& m : models) {
      Profile pm = profile_of(m);
      bool below = false;
      for (const auto& n : sat)
        below = below || (n[0] >= pm[0] && n[1] >= pm[1]);
      ASSERT_EQ(uf.eval(m), below) << print_formula(f) << "\n" << print_model(m);
    }
  }
}

TEST(TranslateQuotient, Examples) {
  EXPECT_EQ(quotient_disjunct(kP, Dialect::FOEI, Disjunct{{1}, {}, {1}}),
            F("(E x0. p(x0)) & A x. p(x)"));
  // Pi plays no part in the FOEI rendering
  EXPECT_EQ(quotient_disjunct(kP, Dialect::FOEI, Disjunct{{0, 1}, {0}, {1}}),
            quotient_disjunct(kP, Dialect::FOEI, Disjunct{{0, 1}, {}, {1}}));
  EXPECT_EQ(quotient_disjunct(kP, Dialect::FOE, Disjunct{{0, 1}, {0}, {}}),
            F("(E x0. !p(x0)) & (E x1. p(x1)) & A x. !p(x)"));
  Formula two = F("E x. E y. x != y");
  EXPECT_FALSE(are_equivalent(two, translate_quotient(two, kP, Dialect::FOE), kP, Dialect::FOE));
  Formula ex = F("E x. p(x)");
  EXPECT_TRUE(are_equivalent(ex, translate_quotient(ex, kP, Dialect::FOE), kP, Dialect::FOE));
  EXPECT_THROW(translate_quotient(ex, kP, Dialect::M), DialectError);
  EXPECT_THROW(translate_quotient(F("E x. !p(x)"), kP, Dialect::FOE, true), InvalidArgument);
}

TEST(Translations, EmptyNormalFormGivesFalse) {
  Formula no = F("E x. false");
  for (Dialect d : kAll) {
    EXPECT_EQ(translate_monotone(no, kP, {"p"}, d), Formula::bottom());
    EXPECT_EQ(translate_universal(no, kP, d), Formula::bottom());
    if (d != Dialect::FOE) EXPECT_EQ(translate_continuous(no, kP, {"p"}, d), Formula::bottom());
    if (d != Dialect::M) EXPECT_EQ(translate_quotient(no, kP, d), Formula::bottom());
  }
}

TEST(Translations, FragmentSoundness) {
  const std::set<std::string> b{"p"};
  for (Dialect d : kAll)
    for (const auto& f : corpus_of(kPQ, d, 2, 30, 72)) {
      Formula mono = translate_monotone(f, kPQ, b, d);
      EXPECT_TRUE(check_fragment(mono, FragmentSpec::positive_in(b))) << print_formula(f);
      EXPECT_TRUE(in_dialect(mono, d));
      Formula uni = translate_universal(f, kPQ, d);
      EXPECT_TRUE(check_fragment(uni, FragmentSpec::universal())) << print_formula(f);
      EXPECT_TRUE(in_dialect(uni, d));
      if (d != Dialect::FOE) {
        Formula cont = translate_continuous(f, kPQ, b, d);
        EXPECT_TRUE(check_fragment(cont, FragmentSpec::continuous_in(b))) << print_formula(f);
        EXPECT_TRUE(in_dialect(cont, d));
      }
      if (d != Dialect::M) {
        Formula quo = translate_quotient(f, kPQ, d);
        EXPECT_TRUE(in_dialect(quo, Dialect::M)) << print_formula(f);
      }
    }
}

TEST(Translations, PositiveQuotient) {
  std::set<std::string> all{"p", "q"};
  for (Dialect d : {Dialect::FOE, Dialect::FOEI})
    for (const auto& f : corpus_of(kPQ, d, 2, 30, 74, corpus::Shape::PositiveIn, all)) {
      Formula quo = translate_quotient(f, kPQ, d, true);
      EXPECT_TRUE(in_dialect(quo, Dialect::M));
      EXPECT_TRUE(check_fragment(quo, FragmentSpec::positive_in(all))) << print_formula(f);
    }
}

TEST(Translations, PositiveContinuousQuotient) {
  // positive in every predicate and syntactically continuous in p
  const std::set<std::string> b{"p"};
  corpus::Options o;
  o.preds = kPQ;
  o.dialect = Dialect::FOEI;
  o.max_rank = 2;
  o.shape = corpus::Shape::ContinuousIn;
  o.b = b;
  std::size_t tested = 0;
  for (const auto& f : corpus::sentences(o, 200, 76)) {
    if (!check_fragment(f, FragmentSpec::positive_in({"p", "q"}))) continue;
    if (!check_fragment(f, FragmentSpec::equality_free())) continue;
    Formula quo = translate_quotient(f, kPQ, Dialect::FOEI, true, b);
    EXPECT_TRUE(check_fragment(quo, FragmentSpec::continuous_in(b))) << print_formula(f);
    ++tested;
  }
  EXPECT_GT(tested, 5u);
}

TEST(Translations, OneWayImplication) {
  auto grid = enumerate_profiles(kPQ, {Count::fin(0), Count::fin(1), Count::fin(2), kOmega});
  for (const auto& f : corpus_of(kPQ, Dialect::FOEI, 2, 30, 78)) {
    AbstractFormula a(f, kPQ), mono(translate_monotone(f, kPQ, {"q"}, Dialect::FOEI), kPQ),
        uni(translate_universal(f, kPQ, Dialect::FOEI), kPQ);
    for (const auto& q : grid) {
      if (!a.eval(q)) continue;
      ASSERT_TRUE(mono.eval(q)) << print_formula(f);
      ASSERT_TRUE(uni.eval(q)) << print_formula(f);
    }
  }
}

TEST(Translations, OmegaProductLaw) {
  auto grid = enumerate_profiles(kP, oracle::counts_upto(2, false));
  for (const auto& f : corpus_of(kP, Dialect::FOEI, 2, 100, 80)) {
    AbstractFormula a(f, kP), quo(translate_quotient(f, kP, Dialect::FOEI), kP);
    for (const auto& q : grid) ASSERT_EQ(quo.eval(q), a.eval(omega_product(q))) << print_formula(f);
  }
}
