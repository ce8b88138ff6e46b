#include <gtest/gtest.h>

#include <algorithm>

#include "monadic/monadic.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace monadic;

namespace {

const PredSet kP{"p"};
const PredSet kPQ{"p", "q"};

Formula F(const std::string& s, const PredSet& ps = kPQ) { return parse_formula(s, ps); }

ConcreteModel M(const PredSet& ps, std::vector<TypeMask> c) {
  return ConcreteModel(ps, std::move(c));
}

std::vector<Formula> corpus_of(Dialect d, corpus::Shape shape = corpus::Shape::Any,
                               std::uint32_t seed = 21) {
  corpus::Options o;
  o.preds = kPQ;
  o.dialect = d;
  o.max_rank = 2;
  o.shape = shape;
  return corpus::sentences(o, 150, seed);
}

}  // namespace

TEST(EvalConcrete, Examples) {
  ConcreteModel empty(kP, {});
  EXPECT_TRUE(eval_concrete(empty, F("A x. false", kP)));
  EXPECT_FALSE(eval_concrete(empty, F("E x. true", kP)));
  EXPECT_TRUE(eval_concrete(M(kP, {1, 0}), F("E x. p(x)", kP)));
  EXPECT_FALSE(eval_concrete(M(kP, {1, 0}), F("A x. p(x)", kP)));
  for (const auto& m : enumerate_models(kP, 3)) {
    EXPECT_FALSE(eval_concrete(m, F("Einf x. true", kP)));
    EXPECT_TRUE(eval_concrete(m, F("Ainf x. false", kP)));
  }
}

TEST(EvalConcrete, FreeVariables) {
  ConcreteModel m = M(kP, {1, 0});
  Formula f = F("p(x) & E y. x != y & !p(y)", kP);
  EXPECT_TRUE(eval_concrete(m, f, {{"x", 0}}));
  EXPECT_FALSE(eval_concrete(m, f, {{"x", 1}}));
  EXPECT_THROW(eval_concrete(m, f), UnboundVariable);
  EXPECT_THROW(eval_concrete(m, f, {{"x", 2}}), InvalidArgument);
  EXPECT_THROW(eval_concrete(m, F("E x. q(x)")), UnknownPredicate);
}

TEST(EvalConcrete, WSemantics) {
  Formula w = F("W x. (p(x), q(x))");
  // on finite models W is just the universal part
  for (const auto& m : enumerate_models(kPQ, 2))
    EXPECT_EQ(eval_concrete(m, w), eval_concrete(m, F("A x. p(x) | q(x)")));
}

TEST(EvalConcrete, MatchesOracleOnCorpus) {
  auto models = enumerate_models(kPQ, 3);
  for (Dialect d : {Dialect::FOE, Dialect::FOEI})
    for (const auto& f : corpus_of(d)) {
      ConcreteFormula cf(f, kPQ);
      for (const auto& m : models)
        ASSERT_EQ(cf.eval(m), oracle::eval(m, f)) << print_formula(f);
    }
}

TEST(EvalConcrete, NegationSoundness) {
  auto models = enumerate_models(kPQ, 3);
  for (const auto& f : corpus_of(Dialect::FOEI)) {
    ConcreteFormula a(f, kPQ), b(negate(f), kPQ);
    for (const auto& m : models) ASSERT_NE(a.eval(m), b.eval(m)) << print_formula(f);
  }
}

TEST(EvalConcrete, Duality) {
  auto models = enumerate_models(kPQ, 3);
  for (const auto& f : corpus_of(Dialect::FOEI)) {
    ConcreteFormula a(f, kPQ), b(dualize(f), kPQ);
    for (const auto& m : models)
      ASSERT_NE(a.eval(m), b.eval(complement(m))) << print_formula(f);
  }
}

TEST(EvalConcrete, MonadicSentencesAreQuotientInvariant) {
  for (const auto& f : corpus_of(Dialect::M, corpus::Shape::Any, 4)) {
    ConcreteFormula cf(f, kPQ);
    for (const auto& m : enumerate_models(kPQ, 3)) {
      bool v = cf.eval(m);
      for (const auto& q : quotients_of(m)) ASSERT_EQ(cf.eval(q), v) << print_formula(f);
    }
  }
}

TEST(EvalConcrete, UniversalSentencesArePreservedUnderSubmodels) {
  for (const auto& f : corpus_of(Dialect::FOEI, corpus::Shape::Universal, 8)) {
    ASSERT_TRUE(check_fragment(f, FragmentSpec::universal()));
    ConcreteFormula cf(f, kPQ);
    for (const auto& m : enumerate_models(kPQ, 3)) {
      if (!cf.eval(m)) continue;
      for (const auto& s : submodels_of(m)) ASSERT_TRUE(cf.eval(s)) << print_formula(f);
    }
  }
}

TEST(EnumerateModels, Counts) {
  auto a = enumerate_models(kP, 1);
  ASSERT_EQ(a.size(), 3u);
  EXPECT_EQ(a[0].size(), 0u);
  auto e = enumerate_models(PredSet{}, 2);
  ASSERT_EQ(e.size(), 3u);
  EXPECT_EQ(e[2].colours(), (std::vector<TypeMask>{0, 0}));
  EXPECT_EQ(enumerate_models(kPQ, 2).size(), 21u);
  EXPECT_EQ(enumerate_models(kPQ, 3).size(), 85u);
  EXPECT_THROW(enumerate_models(kPQ, 12, 1000), CapExceeded);
}

TEST(EnumerateModels, OrderedAndDistinct) {
  auto ms = enumerate_models(kPQ, 3);
  for (std::size_t i = 1; i < ms.size(); ++i) {
    auto key = [](const ConcreteModel& m) {
      return std::make_pair(m.size(), m.colours());
    };
    EXPECT_LT(key(ms[i - 1]), key(ms[i]));
  }
}

TEST(Submodels, Examples) {
  EXPECT_EQ(submodels_of(M(kP, {1, 0})).size(), 4u);
  auto e = submodels_of(ConcreteModel(kP, {}));
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].size(), 0u);
  auto s = submodels_of(M(kP, {1}));
  ASSERT_EQ(s.size(), 2u);
  EXPECT_TRUE(std::count(s.begin(), s.end(), ConcreteModel(kP, {})) == 1);
  EXPECT_TRUE(std::count(s.begin(), s.end(), M(kP, {1})) == 1);
}

TEST(Quotients, Examples) {
  auto q = quotients_of(M(kP, {1, 1}));
  ASSERT_EQ(q.size(), 2u);
  EXPECT_TRUE(std::count(q.begin(), q.end(), M(kP, {1})) == 1);
  EXPECT_TRUE(std::count(q.begin(), q.end(), M(kP, {1, 1})) == 1);
  EXPECT_EQ(quotients_of(M(kP, {1, 0})).size(), 1u);
  EXPECT_EQ(quotients_of(ConcreteModel(kP, {})).size(), 1u);
  // partitions of a 3-element block: Bell(3) = 5
  EXPECT_EQ(quotients_of(M(kP, {0, 0, 0})).size(), 5u);
}

TEST(Quotients, PreserveRealisedTypes) {
  for (const auto& m : enumerate_models(kPQ, 3))
    for (const auto& q : quotients_of(m)) {
      auto set_of = [](const ConcreteModel& x) {
        std::set<TypeMask> s(x.colours().begin(), x.colours().end());
        return s;
      };
      EXPECT_EQ(set_of(q), set_of(m));
      EXPECT_LE(q.size(), m.size());
    }
}

TEST(BExtensions, Examples) {
  auto a = b_extensions_of(M(kP, {0}), {"p"});
  ASSERT_EQ(a.size(), 2u);
  EXPECT_TRUE(std::count(a.begin(), a.end(), M(kP, {1})) == 1);
  auto b = b_extensions_of(M(kPQ, {2, 0, 3}), {});
  ASSERT_EQ(b.size(), 1u);
  auto c = b_extensions_of(M(kPQ, {2}), {"p"});
  ASSERT_EQ(c.size(), 2u);
  EXPECT_TRUE(std::count(c.begin(), c.end(), M(kPQ, {3})) == 1);
  EXPECT_EQ(b_extensions_of(M(kPQ, {0, 0}), {"p", "q"}).size(), 16u);
  EXPECT_THROW(b_extensions_of(M(kP, {0}), {"r"}), UnknownPredicate);
}

TEST(BExtensions, OnlyAddBPredicates) {
  for (const auto& m : enumerate_models(kPQ, 2))
    for (const auto& e : b_extensions_of(m, {"q"})) {
      ASSERT_EQ(e.size(), m.size());
      for (std::size_t i = 0; i < m.size(); ++i) {
        EXPECT_EQ(e.colour(i) & m.colour(i), m.colour(i));
        EXPECT_EQ((e.colour(i) ^ m.colour(i)) & ~kPQ.bit("q"), 0u);
      }
    }
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement(M(kPQ, {0, 1, 3})), M(kPQ, {3, 2, 0}));
}
