#include <gtest/gtest.h>

#include <random>

#include <cohere/lp.hpp>

#include "support/vertex_oracle.hpp"

using namespace cohere;
using namespace cohere::lp;

namespace {

using R = Rational;

// Masses of ABC, AB!C, A!BC, A!B!C, !ABC, !AB!C with p(C|B) = x, p(B|A) = y,
// p(A|A or B) = t.
LinearProgram weak_transitivity_system(const R& x, const R& y, const R& t) {
  LinearProgram lp(6);
  lp.add_constraint({1 - x, -x, 0, 0, 1 - x, -x}, Relation::Equal, 0);
  lp.add_constraint({1 - y, 1 - y, -y, -y, 0, 0}, Relation::Equal, 0);
  lp.add_constraint({1 - t, 1 - t, 1 - t, 1 - t, -t, -t}, Relation::Equal, 0);
  return lp;
}

}  // namespace

TEST(Solve, SingleVariableBound) {
  LinearProgram lp(1);
  lp.add_constraint({1}, Relation::LessEqual, 1);
  lp.set_objective({1}, Sense::Maximize);
  auto r = solve(lp);
  ASSERT_EQ(r.status, Status::Optimal);
  EXPECT_EQ(r.value, 1);
  EXPECT_EQ(r.witness, std::vector<R>{1});
}

TEST(Solve, LowerBoundProgramAtFourFifthsNineTenths) {
  auto lp = weak_transitivity_system(R(4, 5), R(9, 10), R(9, 10));
  lp.add_constraint({1, 1, 1, 1, 0, 0}, Relation::Equal, 1);
  lp.set_objective({1, 0, 1, 0, 0, 0}, Sense::Minimize);
  auto r = solve(lp);
  ASSERT_EQ(r.status, Status::Optimal);
  EXPECT_EQ(r.value, R(157, 225));
  EXPECT_TRUE(satisfies(lp, r.witness));
  EXPECT_EQ(lp.evaluate(r.witness), r.value);

  auto oracle = support::enumerate_vertices(lp);
  ASSERT_TRUE(oracle.feasible);
  EXPECT_EQ(oracle.value, R(157, 225));
}

TEST(Solve, ForcedZero) {
  LinearProgram lp(4);
  lp.add_constraint({1, 0, 1, 0}, Relation::Equal, 0);
  lp.set_objective({1, 0, 1, 0}, Sense::Minimize);
  auto r = solve(lp);
  ASSERT_EQ(r.status, Status::Optimal);
  EXPECT_EQ(r.value, 0);
}

TEST(Solve, Unbounded) {
  LinearProgram lp(2);
  lp.add_constraint({1, -1}, Relation::LessEqual, 1);
  lp.set_objective({1, 1}, Sense::Maximize);
  EXPECT_EQ(solve(lp).status, Status::Unbounded);
}

TEST(Solve, FreeVariable) {
  LinearProgram lp(1);
  lp.set_free(0);
  lp.add_constraint({1}, Relation::GreaterEqual, -3);
  lp.set_objective({1}, Sense::Minimize);
  auto r = solve(lp);
  ASSERT_EQ(r.status, Status::Optimal);
  EXPECT_EQ(r.value, -3);
}

TEST(Solve, BealeCyclingExampleTerminates) {
  LinearProgram lp(4);
  lp.add_constraint({R(1, 4), -8, -1, 9}, Relation::LessEqual, 0);
  lp.add_constraint({R(1, 2), -12, R(-1, 2), 3}, Relation::LessEqual, 0);
  lp.add_constraint({0, 0, 1, 0}, Relation::LessEqual, 1);
  lp.set_objective({R(-3, 4), 20, R(-1, 2), 6}, Sense::Minimize);
  auto r = solve(lp);
  ASSERT_EQ(r.status, Status::Optimal);
  EXPECT_EQ(r.value, R(-5, 4));
}

TEST(Feasible, SolvableAtOneHalf) {
  const R h(1, 2);
  auto lp = weak_transitivity_system(h, h, h);
  lp.add_constraint({1, 0, 1, 0, 0, 0}, Relation::Equal, 0);
  lp.add_constraint({1, 1, 1, 1, 1, 1}, Relation::Equal, 1);
  auto r = feasible(lp);
  ASSERT_EQ(r.status, Status::Optimal);
  EXPECT_TRUE(satisfies(lp, r.witness));
}

TEST(Feasible, UnsolvableAtSurePremises) {
  auto lp = weak_transitivity_system(1, 1, 1);
  lp.add_constraint({1, 0, 1, 0, 0, 0}, Relation::Equal, 0);
  lp.add_constraint({1, 1, 1, 1, 1, 1}, Relation::Equal, 1);
  EXPECT_EQ(feasible(lp).status, Status::Infeasible);
}

TEST(Feasible, EmptyRegion) {
  LinearProgram lp(1);
  lp.add_constraint({1}, Relation::LessEqual, -1);
  EXPECT_EQ(feasible(lp).status, Status::Infeasible);
  EXPECT_EQ(solve(lp).status, Status::Infeasible);
}

TEST(LinearProgram, ConstructionErrors) {
  EXPECT_THROW(LinearProgram(0), std::invalid_argument);
  LinearProgram lp(2);
  EXPECT_THROW(lp.add_constraint({1}, Relation::Equal, 0), std::invalid_argument);
  EXPECT_THROW(lp.set_objective({1, 2, 3}, Sense::Minimize), std::invalid_argument);
  EXPECT_THROW(solve(lp), std::invalid_argument);
}

TEST(SolveRecorder, CapturesSolves) {
  LinearProgram lp(1);
  lp.add_constraint({1}, Relation::LessEqual, 1);
  SolveRecorder outer;
  {
    SolveRecorder inner;
    solve(lp);
    EXPECT_EQ(inner.records().size(), 1u);
  }
  feasible(lp);
  ASSERT_EQ(outer.records().size(), 2u);
  EXPECT_TRUE(outer.records()[1].feasibility_only);
}

TEST(SolveProperty, MatchesVertexOracleOnRandomPrograms) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> rhs(-3, 6);
  std::uniform_int_distribution<int> rel(0, 2);
  std::size_t optimal = 0, infeasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const std::size_t m = 1 + (trial / 4) % 4;
    LinearProgram lp(n);
    lp.add_constraint(std::vector<R>(n, 1), Relation::LessEqual, 10);
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<R> row;
      for (std::size_t j = 0; j < n; ++j) row.emplace_back(coef(rng));
      lp.add_constraint(row, static_cast<Relation>(rel(rng)), rhs(rng));
    }
    std::vector<R> objective;
    for (std::size_t j = 0; j < n; ++j) objective.emplace_back(coef(rng));

    lp.set_objective(objective, Sense::Minimize);
    auto lo = solve(lp);
    auto oracle_lo = support::enumerate_vertices(lp);
    lp.set_objective(objective, Sense::Maximize);
    auto hi = solve(lp);
    auto oracle_hi = support::enumerate_vertices(lp);

    ASSERT_NE(lo.status, Status::Unbounded);
    ASSERT_EQ(lo.status == Status::Optimal, oracle_lo.feasible) << "trial " << trial;
    ASSERT_EQ(feasible(lp).status == Status::Optimal, oracle_lo.feasible);
    if (!oracle_lo.feasible) {
      ++infeasible;
      continue;
    }
    ++optimal;
    EXPECT_EQ(lo.value, oracle_lo.value) << "trial " << trial;
    EXPECT_EQ(hi.value, oracle_hi.value) << "trial " << trial;
    EXPECT_LE(lo.value, hi.value);
    EXPECT_TRUE(satisfies(lp, lo.witness));
    EXPECT_TRUE(satisfies(lp, hi.witness));
  }
  EXPECT_GT(optimal, 50u);
  EXPECT_GT(infeasible, 10u);
}
