#include <gtest/gtest.h>

#include <cohere/kb.hpp>
#include <cohere/propagation.hpp>

using namespace cohere;

namespace {

using R = Rational;
using S = Statement;

const Event A = Event::atom("A");
const Event B = Event::atom("B");
const Event C = Event::atom("C");
const Event D = Event::atom("D");
const Event E = Event::atom("E");

const char* kBarbaraOr = "Barbara with p(A|A or B) > 0";
const char* kDariiOr = "Darii with p(A|A or B) > 0";
const char* kBarbaraB = "Barbara with p(A|B) > 0";
const char* kDariiB = "Darii with p(A|B) > 0";

KnowledgeBase barbara_or() {
  return KnowledgeBase({S::default_rule(B, C), S::default_rule(A, B), S::negated_default(A | B, !A)});
}
KnowledgeBase darii_or() {
  return KnowledgeBase({S::default_rule(B, C), S::negated_default(A, !B), S::negated_default(A | B, !A)});
}
KnowledgeBase barbara_b() {
  return KnowledgeBase({S::default_rule(B, C), S::default_rule(A, B), S::negated_default(B, !A)});
}
KnowledgeBase darii_b() {
  return KnowledgeBase({S::default_rule(B, C), S::negated_default(A, !B), S::negated_default(B, !A)});
}
KnowledgeBase transitivity() { return KnowledgeBase({S::default_rule(B, C), S::default_rule(A, B)}); }

void expect_counterexample_reverifies(const KnowledgeBase& kb, const S& conclusion, const Verdict& v) {
  ASSERT_EQ(v.status, VerdictStatus::NotEntailed);
  ASSERT_TRUE(v.counterexample);
  auto assessment = kb_to_assessment(kb);
  EXPECT_TRUE(contains(assessment.box, v.counterexample->point));
  auto family = assessment.family;
  family.push_back(conclusion.conditional());
  auto point = v.counterexample->point;
  point.push_back(v.counterexample->z);
  EXPECT_TRUE(check_coherence(point, family).coherent);
  const bool kind_one = conclusion.canonical().is_default();
  if (kind_one) {
    EXPECT_LT(v.counterexample->z, 1);
  } else {
    EXPECT_EQ(v.counterexample->z, 1);
  }
}

}  // namespace

TEST(Statement, IntervalsPerKind) {
  EXPECT_EQ(S(StatementKind::Default, A, B).interval(), Interval::point(1));
  EXPECT_EQ(S(StatementKind::NegConsequentDefault, A, B).interval(), Interval::point(0));
  EXPECT_EQ(S(StatementKind::NegatedDefault, A, B).interval(), Interval(0, 1, false, true));
  EXPECT_EQ(S(StatementKind::NegatedNegDefault, A, B).interval(), Interval(0, 1, true, false));
}

TEST(Statement, ImpossibleAntecedentRejected) {
  EXPECT_THROW(S::default_rule(A & !A, B), std::invalid_argument);
  EXPECT_THROW(KnowledgeBase({}), std::invalid_argument);
}

TEST(Statement, SemanticEquality) {
  EXPECT_TRUE(semantically_equal(S::negated_default(A | B, !A), S::negated_default(B | A, !A)));
  EXPECT_TRUE(semantically_equal(S(StatementKind::NegConsequentDefault, A, !B), S::default_rule(A, B)));
  EXPECT_TRUE(semantically_equal(S(StatementKind::NegatedNegDefault, A, C), S::negated_default(A, !C)));
  EXPECT_TRUE(semantically_equal(S::default_rule(A, B), S::default_rule(A, A & B)));
  EXPECT_FALSE(semantically_equal(S::default_rule(A, B), S::negated_default(A, B)));
  EXPECT_FALSE(semantically_equal(S::default_rule(A, B), S::default_rule(B, A)));
}

TEST(KbToAssessment, Examples) {
  auto a = kb_to_assessment(barbara_or());
  ASSERT_EQ(a.family.size(), 3u);
  EXPECT_TRUE(conditional_equivalent(a.family[2], ConditionalEvent(!A, A | B)));
  EXPECT_EQ(a.box, (Box{Interval::point(1), Interval::point(1), Interval(0, 1, false, true)}));

  auto single = kb_to_assessment(KnowledgeBase({S::default_rule(A, B)}));
  EXPECT_EQ(single.box, Box{Interval::point(1)});
  auto negated = kb_to_assessment(KnowledgeBase({S::negated_default(A, B)}));
  EXPECT_TRUE(conditional_equivalent(negated.family[0], ConditionalEvent(B, A)));
  EXPECT_EQ(negated.box, Box{Interval(0, 1, false, true)});
}

TEST(Conjugate, RewritesNegatedDefaults) {
  auto k = conjugate(KnowledgeBase({S::negated_default(A, B)}));
  const auto& s = k.statements()[0];
  EXPECT_EQ(s.kind(), StatementKind::NegatedNegDefault);
  EXPECT_EQ(s.consequent().to_string(), "!B");
  EXPECT_EQ(s.interval(), Interval(0, 1, true, false));
  EXPECT_TRUE(semantically_equal(s, S::negated_default(A, B)));

  auto fixed = conjugate(KnowledgeBase({S::default_rule(B, C)}));
  EXPECT_EQ(fixed.statements()[0].kind(), StatementKind::Default);
}

TEST(Conjugate, IsAnInvolution) {
  for (const auto& kb : {barbara_or(), darii_or(), darii_b()}) {
    auto back = conjugate(conjugate(kb));
    ASSERT_EQ(back.size(), kb.size());
    for (std::size_t i = 0; i < kb.size(); ++i) {
      EXPECT_EQ(back.statements()[i].kind(), kb.statements()[i].kind());
      EXPECT_EQ(back.statements()[i].consequent().to_string(), kb.statements()[i].consequent().to_string());
      EXPECT_EQ(back.statements()[i].antecedent().to_string(), kb.statements()[i].antecedent().to_string());
    }
  }
}

TEST(PConsistent, Examples) {
  auto v = p_consistent(barbara_or());
  EXPECT_EQ(v.status, VerdictStatus::PConsistent);
  ASSERT_TRUE(v.witness);
  EXPECT_TRUE(check_coherence(*v.witness, kb_to_assessment(barbara_or()).family).coherent);

  EXPECT_EQ(p_consistent(KnowledgeBase({S::default_rule(A, B), S::default_rule(A, !B)})).status,
            VerdictStatus::NotPConsistent);

  auto single = p_consistent(KnowledgeBase({S::default_rule(A, B)}));
  EXPECT_EQ(single.status, VerdictStatus::PConsistent);
  EXPECT_EQ(*single.witness, PreciseAssessment{1});
}

TEST(PEntails, CertifiedPatterns) {
  struct Case {
    KnowledgeBase kb;
    S conclusion;
    const char* certificate;
  };
  const std::vector<Case> cases{
      {barbara_or(), S::default_rule(A, C), kBarbaraOr},
      {darii_or(), S::negated_default(A, !C), kDariiOr},
      {barbara_b(), S::default_rule(A, C), kBarbaraB},
      {darii_b(), S::negated_default(A, !C), kDariiB},
      {KnowledgeBase({S::default_rule(A, C), S::default_rule(A, B)}), S::default_rule(A & B, C),
       "Cautious Monotonicity"},
      {KnowledgeBase({S::default_rule(A, C), S::negated_default(A, !B)}), S::default_rule(A & B, C),
       "Rational Monotonicity"},
  };
  for (const auto& c : cases) {
    auto v = p_entails(c.kb, c.conclusion);
    EXPECT_EQ(v.status, VerdictStatus::Entailed) << c.certificate;
    EXPECT_EQ(v.certificate, c.certificate);
    EXPECT_FALSE(v.counterexample);
  }
}

TEST(PEntails, MatchingIsSemantic) {
  KnowledgeBase kb({S::default_rule(B, C & B), S(StatementKind::NegConsequentDefault, A, !B),
                    S::negated_default(B | A, !A)});
  auto v = p_entails(kb, S::default_rule(A, C));
  EXPECT_EQ(v.status, VerdictStatus::Entailed);
  EXPECT_EQ(v.certificate, kBarbaraOr);
  EXPECT_EQ(v.premises_used, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(PEntails, PlainTransitivityIsRefutedAtTheCorner) {
  const auto kb = transitivity();
  auto v = p_entails(kb, S::default_rule(A, C));
  expect_counterexample_reverifies(kb, S::default_rule(A, C), v);
  EXPECT_EQ(v.counterexample->point, (PreciseAssessment{1, 1}));
  EXPECT_EQ(v.counterexample->z, 0);

  auto w = p_entails(kb, S::negated_default(A, C));
  expect_counterexample_reverifies(kb, S::negated_default(A, C), w);
}

// p(C|A) = p(B|A) = 1/2 with p(C|AB) = 1 is coherent, so the negated-default
// form with both premises negated does not follow.
TEST(PEntails, BothPremisesNegatedMonotonicityIsRefuted) {
  KnowledgeBase kb({S::negated_default(A, C), S::negated_default(A, !B)});
  const auto conclusion = S::negated_default(A & B, C);
  auto v = p_entails(kb, conclusion);
  expect_counterexample_reverifies(kb, conclusion, v);
  EXPECT_EQ(cm_bounds(v.counterexample->point[0], 1 - v.counterexample->point[1]).hi(), 1);
}

TEST(PEntails, NoRuleAndNoCounterexampleIsUnknown) {
  auto v = p_entails(KnowledgeBase({S::default_rule(A, B)}), S::default_rule(A, B),
                     EntailmentOptions{SearchOptions{50, 0}, 4});
  EXPECT_EQ(v.status, VerdictStatus::Unknown);
  EXPECT_TRUE(v.certificate.empty());
  EXPECT_FALSE(v.counterexample);
}

TEST(PEntails, InconsistentKnowledgeBaseThrows) {
  KnowledgeBase kb({S::default_rule(A, B), S::default_rule(A, !B)});
  EXPECT_THROW(p_entails(kb, S::default_rule(A, C)), InconsistentKnowledgeBase);
}

TEST(MatchRules, ReportsSubSequenceIndices) {
  KnowledgeBase kb({S::default_rule(D, E), S::default_rule(B, C), S::default_rule(A, B),
                    S::negated_default(A | B, !A)});
  auto matches = match_rules(kb, S::default_rule(A, C));
  ASSERT_FALSE(matches.empty());
  EXPECT_EQ(matches[0].rule->name, kBarbaraOr);
  EXPECT_EQ(matches[0].premises, (std::vector<std::size_t>{1, 2, 3}));
}

TEST(KbProperty, ConjugacyInvariance) {
  const std::vector<std::pair<KnowledgeBase, S>> corpus{
      {barbara_or(), S::default_rule(A, C)},       {darii_or(), S::negated_default(A, !C)},
      {barbara_b(), S::default_rule(A, C)},        {darii_b(), S::negated_default(A, !C)},
      {transitivity(), S::negated_default(A, C)},
      {KnowledgeBase({S::negated_default(A, C), S::negated_default(A, !B)}), S::negated_default(A & B, C)},
  };
  for (const auto& [kb, conclusion] : corpus) {
    auto conj = conjugate(kb);
    EXPECT_EQ(p_consistent(kb).status, p_consistent(conj).status);
    auto a = p_entails(kb, conclusion);
    auto b = p_entails(conj, conclusion);
    EXPECT_EQ(a.status, b.status) << conclusion.to_string();
    EXPECT_EQ(a.certificate, b.certificate);
  }
}

TEST(KbProperty, EntailmentSurvivesFreshStatements) {
  const std::vector<std::pair<KnowledgeBase, S>> certified{
      {barbara_or(), S::default_rule(A, C)},
      {darii_b(), S::negated_default(A, !C)},
      {KnowledgeBase({S::default_rule(A, C), S::default_rule(A, B)}), S::default_rule(A & B, C)},
  };
  const std::vector<std::vector<S>> extras{
      {S::default_rule(D, E)},
      {S::negated_default(D, E), S::default_rule(E, !D)},
      {S::default_rule(D | E, D)},
  };
  for (const auto& [kb, conclusion] : certified) {
    for (const auto& extra : extras) {
      auto statements = kb.statements();
      statements.insert(statements.begin(), extra.begin(), extra.end());
      KnowledgeBase bigger(statements);
      ASSERT_EQ(p_consistent(bigger).status, VerdictStatus::PConsistent);
      auto v = p_entails(bigger, conclusion);
      EXPECT_EQ(v.status, VerdictStatus::Entailed);
      EXPECT_EQ(v.premises_used.size(), kb.size());
    }
  }
}

TEST(KbProperty, SubSequencesOfConsistentBasesAreConsistent) {
  KnowledgeBase kb({S::default_rule(B, C), S::negated_default(A, !B), S::negated_default(A | B, !A),
                    S::default_rule(D, E), S::negated_default(C, D)});
  ASSERT_EQ(p_consistent(kb).status, VerdictStatus::PConsistent);
  for (unsigned mask = 1; mask < (1U << kb.size()); ++mask) {
    std::vector<S> sub;
    for (std::size_t i = 0; i < kb.size(); ++i) {
      if (mask & (1U << i)) sub.push_back(kb.statements()[i]);
    }
    EXPECT_EQ(p_consistent(KnowledgeBase(sub)).status, VerdictStatus::PConsistent) << mask;
  }
}
