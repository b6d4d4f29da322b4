#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include <cohere/coherence.hpp>
#include <cohere/sampling.hpp>

#include "support/generators.hpp"

using namespace cohere;

namespace {

using R = Rational;

const Event A = Event::atom("A");
const Event B = Event::atom("B");
const Event C = Event::atom("C");
const Event H = Event::atom("H");

const Family kWeakTransitivity{{C, B}, {B, A}, {A, A | B}};
const Family kTransitivity{{C, B}, {B, A}, {C, A}};

Interval open_low(R lo, R hi) { return Interval(std::move(lo), std::move(hi), true, false); }
Interval open_high(R lo, R hi) { return Interval(std::move(lo), std::move(hi), false, true); }

}  // namespace

TEST(CheckCoherence, WeakTransitivityFamilyAcceptsEveryGridPoint) {
  for (int x = 0; x <= 4; ++x) {
    for (int y = 0; y <= 4; ++y) {
      for (int t = 0; t <= 4; ++t) {
        PreciseAssessment p{R(x, 4), R(y, 4), R(t, 4)};
        EXPECT_TRUE(check_coherence(p, kWeakTransitivity).coherent) << to_string(p);
      }
    }
  }
}

TEST(CheckCoherence, ComplementaryConditionalsMustSumToOne) {
  const Family f{{A, H}, {!A, H}};
  EXPECT_FALSE(check_coherence(PreciseAssessment{1, 1}, f).coherent);
  EXPECT_TRUE(check_coherence(PreciseAssessment{1, 0}, f).coherent);
}

TEST(CheckCoherence, UnconditionalEvent) {
  const Family f{{A, Event::top()}};
  EXPECT_TRUE(check_coherence(PreciseAssessment{1}, f).coherent);
}

TEST(CheckCoherence, InputValidation) {
  EXPECT_THROW(check_coherence(PreciseAssessment{1}, kTransitivity), std::invalid_argument);
  EXPECT_THROW(check_coherence(PreciseAssessment{R(3, 2)}, Family{{A, H}}), std::invalid_argument);
  EXPECT_THROW(check_coherence(PreciseAssessment{}, Family{}), std::invalid_argument);
}

TEST(CheckCoherence, ZeroLayerRestartsOnNullAntecedents) {
  const Family f{{B, A}, {A, Event::top()}};
  auto r = check_coherence(PreciseAssessment{R(1, 2), 0}, f);
  EXPECT_TRUE(r.coherent);
  ASSERT_EQ(r.trace.levels.size(), 2u);
  EXPECT_EQ(r.trace.levels[0].active, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.trace.levels[0].zero_set, (std::vector<std::size_t>{0}));
  EXPECT_EQ(r.trace.levels[1].active, (std::vector<std::size_t>{0}));
  EXPECT_TRUE(r.trace.levels[1].restart.empty());
}

TEST(GCoherence, OpenBoxWitnessedOffTheOpenEnd) {
  Box box{Interval::point(1), Interval::point(1), open_low(0, 1)};
  auto r = check_g_coherence_box(box, kWeakTransitivity);
  ASSERT_EQ(r.status, GStatus::GCoherent);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(*r.witness, (PreciseAssessment{1, 1, R(1, 2)}));
  EXPECT_TRUE(contains(box, *r.witness));
  EXPECT_TRUE(check_coherence(*r.witness, kWeakTransitivity).coherent);
}

TEST(GCoherence, ClosedRelaxationRefuted) {
  Box box{Interval::point(1), Interval::point(1)};
  auto r = check_g_coherence_box(box, Family{{B, A}, {!B, A}});
  EXPECT_EQ(r.status, GStatus::NotGCoherent);
  EXPECT_FALSE(r.witness);
}

TEST(GCoherence, UnitBoxOfIndependentConditionals) {
  Box box{Interval::unit(), Interval::unit()};
  auto r = check_g_coherence_box(box, Family{{B, A}, {C, A}});
  ASSERT_EQ(r.status, GStatus::GCoherent);
  EXPECT_EQ(*r.witness, (PreciseAssessment{0, 0}));
}

TEST(GCoherence, OnlyTheExcludedEndpointIsCoherentGivesUnknown) {
  // p(B|A) + p(!B|A) = 1 forces p(B|A) = 0, which the open end excludes.
  Box box{Interval(0, 1, true, true), Interval::point(1)};
  auto r = check_g_coherence_box(box, Family{{B, A}, {!B, A}}, SearchOptions{64, 3});
  EXPECT_EQ(r.status, GStatus::Unknown);
  EXPECT_FALSE(r.witness);
  EXPECT_EQ(r.candidates_checked, 64u);
}

TEST(TotalCoherence, UnitCubeFamilies) {
  EXPECT_TRUE(total_coherence_unit_box(kWeakTransitivity));
  EXPECT_TRUE(total_coherence_unit_box(kTransitivity));
  EXPECT_FALSE(total_coherence_unit_box(Family{{A, Event::top()}, {!A, Event::top()}}));
}

TEST(TotalCoherence, SizeCap) {
  Family f;
  for (std::size_t i = 0; i <= kMaxTotalCoherenceFamily; ++i) {
    f.push_back({Event::atom("X" + std::to_string(i)), Event::top()});
  }
  EXPECT_THROW(total_coherence_unit_box(f), std::length_error);
}

TEST(CandidateSequence, RespectsOpenEndpointsAndIsDistinct) {
  Box box{open_low(0, 1), open_high(R(1, 4), R(3, 4)), Interval::point(R(1, 3))};
  CandidateSequence seq(box, 9);
  std::set<PreciseAssessment> seen;
  for (int i = 0; i < 500; ++i) {
    auto p = seq.next();
    ASSERT_TRUE(p);
    EXPECT_TRUE(contains(box, *p)) << to_string(*p);
    EXPECT_TRUE(seen.insert(*p).second);
  }
}

TEST(CandidateSequence, PointBoxIsExhausted) {
  CandidateSequence seq(Box{Interval::point(R(1, 2))}, 0);
  EXPECT_TRUE(seq.next());
  EXPECT_FALSE(seq.next());
}

TEST(CandidateSequence, SameSeedSameStream) {
  Box box{Interval::unit(), open_low(0, 1)};
  CandidateSequence a(box, 42), b(box, 42);
  for (int i = 0; i < 300; ++i) EXPECT_EQ(a.next(), b.next());
}

TEST(CoherenceProperty, ComplementIdentity) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> den(1, 60);
  const Family f{{A, H}, {!A, H}};
  for (int i = 0; i < 40; ++i) {
    const int d = den(rng);
    std::uniform_int_distribution<int> num(0, d);
    const R p(num(rng), d);
    EXPECT_TRUE(check_coherence(PreciseAssessment{p, 1 - p}, f).coherent);
    const R q = support::random_grid_value(rng, 7);
    if (q != 1 - p) EXPECT_FALSE(check_coherence(PreciseAssessment{p, q}, f).coherent);
  }
}

TEST(CoherenceProperty, PermutationInvariant) {
  std::mt19937_64 rng(123);
  const std::vector<std::string> atoms{"A", "B", "C"};
  std::size_t coherent = 0, incoherent = 0;
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = 2 + i % 3;
    auto family = support::random_family(rng, n, atoms, 1);
    auto point = support::random_point(rng, n, 4);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    Family permuted;
    PreciseAssessment moved;
    for (auto k : order) {
      permuted.push_back(family[k]);
      moved.push_back(point[k]);
    }
    const bool a = check_coherence(point, family).coherent;
    EXPECT_EQ(a, check_coherence(moved, permuted).coherent);
    (a ? coherent : incoherent)++;
  }
  EXPECT_GT(coherent, 10u);
  EXPECT_GT(incoherent, 10u);
}

TEST(CoherenceProperty, TraceShrinksAndIsBoundedByFamilySize) {
  std::mt19937_64 rng(321);
  const std::vector<std::string> atoms{"A", "B", "C"};
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = 1 + i % 4;
    auto family = support::random_family(rng, n, atoms, 1);
    auto r = check_coherence(support::random_point(rng, n, 2), family);
    EXPECT_LE(r.trace.levels.size(), n);
    for (std::size_t k = 1; k < r.trace.levels.size(); ++k) {
      EXPECT_LT(r.trace.levels[k].active.size(), r.trace.levels[k - 1].active.size());
    }
  }
}

TEST(CoherenceProperty, TotalCoherenceImpliesGCoherenceAndPointwiseCoherence) {
  std::mt19937_64 rng(77);
  const std::vector<std::string> atoms{"A", "B", "C"};
  std::size_t total = 0;
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 2 + i % 2;
    auto family = support::random_family(rng, n, atoms, 1);
    if (!total_coherence_unit_box(family)) continue;
    ++total;
    Box unit(n, Interval::unit());
    EXPECT_EQ(check_g_coherence_box(unit, family).status, GStatus::GCoherent);
    for (int k = 0; k < 10; ++k) {
      EXPECT_TRUE(check_coherence(support::random_point(rng, n, 8), family).coherent);
    }
  }
  EXPECT_GT(total, 5u);
}

TEST(CoherenceProperty, GoodmanNguyenInclusionOrdersProbabilities) {
  std::mt19937_64 rng(8);
  const Family f{{A, B}, {A, A | B}};
  ASSERT_TRUE(gn_included(f[0], f[1]));
  for (int i = 0; i < 200; ++i) {
    auto p = support::random_point(rng, 2, 8);
    if (check_coherence(p, f).coherent) EXPECT_LE(p[0], p[1]) << to_string(p);
  }
}
