#include <gtest/gtest.h>

#include "rideshare/errors.h"
#include "rideshare/instance_io.h"
#include "rideshare/oracle.h"
#include "rideshare/path_solver.h"
#include "testing.h"

namespace rideshare {
namespace {

using testing::PathStratum;
using testing::UnitPath;

Scenario SevenRequestPath() {
  return Scenario(UnitPath(7), 1, 7,
                  {{2, 3}, {4, 4}, {4, 2}, {3, 1}, {2, 1}, {6, 5}, {5, 7}});
}

TEST(Classify, Cases) {
  EXPECT_EQ(Classify(SevenRequestPath()), PathCase::kOuterForward);
  EXPECT_EQ(Classify(Scenario(UnitPath(7), 7, 1, {{4, 2}})), PathCase::kOuterReversed);
  EXPECT_EQ(Classify(Scenario(UnitPath(6), 2, 3, {{5, 5}})), PathCase::kTrivial);
  EXPECT_EQ(Classify(Scenario(UnitPath(5), 3, 3, {{1, 3}, {5, 3}})), PathCase::kInnerOrBoundary);
  EXPECT_EQ(Classify(Scenario(UnitPath(3), 1, 1, {{2, 3}})), PathCase::kInnerOrBoundary);
}

TEST(SolveOuter, SevenRequestRide) {
  EXPECT_EQ(SolveOuter(SevenRequestPath()).waypoints(), (std::vector<Node>{1, 4, 1, 6, 5, 7}));
  const PathSolution s = SolvePath(SevenRequestPath());
  EXPECT_EQ(s.cost, Weight(14));
}

TEST(SolveOuter, ForwardOnly) {
  EXPECT_EQ(SolveOuter(Scenario(UnitPath(6), 2, 5, {{3, 4}})).waypoints(),
            (std::vector<Node>{2, 5}));
}

TEST(SolveOuter, Reversed) {
  // Mirror image of SevenRequestPath.
  const Scenario s = Symmetrize(SevenRequestPath());
  const Ride ride = SolveOuter(s);
  EXPECT_EQ(ride.waypoints(), (std::vector<Node>{7, 4, 7, 2, 3, 1}));
}

TEST(SolveOuter, RejectsInner) {
  EXPECT_THROW(SolveOuter(Scenario(UnitPath(5), 3, 3, {{1, 5}})), ContractError);
}

TEST(CanonicalRide, Examples) {
  const Scenario s(UnitPath(6), 3, 4, {{1, 6}});
  EXPECT_EQ(CanonicalRide(s, 5, 2).waypoints(), (std::vector<Node>{3, 5, 1, 6, 2, 4}));
  EXPECT_EQ(CanonicalRide(s, 4, 4).waypoints(), (std::vector<Node>{3, 4, 1, 6, 4}));
  EXPECT_THROW(CanonicalRide(s, 0, 2), DomainError);
  EXPECT_THROW(CanonicalRide(s, 2, 7), DomainError);

  const Scenario t(UnitPath(7), 4, 4, {{1, 7}, {5, 3}});
  EXPECT_EQ(CanonicalRide(t, 2, 6).waypoints(),
            (std::vector<Node>{4, 2, 1, 2, 5, 3, 6, 7, 6, 4}));
}

TEST(PhaseOneBounds, Example) {
  const Scenario s(UnitPath(7), 3, 5, {{2, 1}, {6, 7}});
  EXPECT_EQ(PhaseOneBounds(s), (CanonicalPair{3, 5}));
}

TEST(PhaseOneBounds, MatchesSetDefinitions) {
  Rng rng(31);
  for (int iter = 0; iter < 1200; ++iter) {
    const Scenario s = testing::RandomPath(rng, iter % 2 ? PathStratum::kInner : PathStratum::kSameSide);
    const CanonicalPair p = PhaseOneBounds(s);
    ASSERT_EQ(p.turn_before_left, testing::NaiveTurnBeforeLeft(s));
    ASSERT_EQ(p.turn_after_right, testing::NaiveTurnAfterRight(s));
  }
}

TEST(InnerTurnMap, Examples) {
  const Scenario s(UnitPath(6), 1, 6, {{5, 2}, {6, 6}});
  for (const TurnPoint& tp : InnerTurnMap(s)) {
    if (tp.turn_after_right == 3) EXPECT_EQ(tp.turn_before_left, 5);
    if (tp.turn_after_right == 2) EXPECT_EQ(tp.turn_before_left, 2);
  }
  // Q_m empty and m < start.
  const Scenario t(UnitPath(6), 4, 6, {{1, 2}, {5, 6}});
  EXPECT_EQ(InnerTurnMap(t).front(), (TurnPoint{1, 4}));
}

TEST(InnerTurnMap, MatchesNaiveMinimum) {
  Rng rng(41);
  for (int iter = 0; iter < 1200; ++iter) {
    const Scenario s = testing::RandomPath(rng, testing::kAllStrata[iter % 5]);
    std::vector<Node> expected_ms;
    for (Node m : s.Landmarks()) {
      if (m <= s.end()) expected_ms.push_back(m);
    }
    const std::vector<TurnPoint> map = InnerTurnMap(s);
    ASSERT_EQ(map.size(), expected_ms.size());
    for (std::size_t i = 0; i < map.size(); ++i) {
      ASSERT_EQ(map[i].turn_after_right, expected_ms[i]);
      ASSERT_EQ(map[i].turn_before_left, testing::NaiveTurnForM(s, expected_ms[i]));
      ASSERT_GE(map[i].turn_before_left, map[i].turn_after_right);
      ASSERT_GE(map[i].turn_before_left, s.start());
    }
  }
}

TEST(SolveInner, Examples) {
  const Scenario a(UnitPath(5), 3, 3, {{1, 3}, {5, 3}});
  EXPECT_EQ(SolvePath(a).cost, Weight(8));
  const Scenario b(UnitPath(5), 3, 4, {{2, 4}});
  const PathSolution sb = SolvePath(b);
  EXPECT_EQ(sb.ride.waypoints(), (std::vector<Node>{3, 2, 4}));
  EXPECT_EQ(sb.cost, Weight(3));
  const Scenario c(UnitPath(3), 1, 1, {{2, 3}});
  EXPECT_EQ(SolvePath(c).cost, Weight(4));
  EXPECT_THROW(SolveInner(Scenario(UnitPath(4), 1, 1, {{3, 3}})), ContractError);
}

// End past every endpoint, and start before every endpoint: the best ride
// turns at the extreme landmark without doubling back through right or left.
TEST(SolveInner, NoDetourPastExtremes) {
  const Scenario a(testing::PathOf({1, 5, 2, 0, 0, 5, 3}), 6, 8, {{1, 1}, {3, 7}});
  EXPECT_EQ(SolvePath(a).cost, Weight(24));
  EXPECT_EQ(BruteForceOptimal(a).cost, Weight(24));
  const Scenario b(testing::PathOf({4, 1, 3, 0, 3, 0, 2}), 1, 5, {{2, 4}, {6, 5}, {8, 3}});
  EXPECT_EQ(SolvePath(b).cost, Weight(24));
  EXPECT_EQ(BruteForceOptimal(b).cost, Weight(24));
  // The literal canonical ride keeps the detour.
  EXPECT_EQ(CanonicalRide(a, 6, 8).waypoints(), (std::vector<Node>{6, 1, 6, 8, 7, 8}));
}

TEST(SolvePath, TrivialCases) {
  const PathSolution a = SolvePath(Scenario(UnitPath(6), 2, 3, {{5, 5}}));
  EXPECT_EQ(a.ride.waypoints(), (std::vector<Node>{2, 5, 3}));
  EXPECT_EQ(a.cost, Weight(5));
  EXPECT_EQ(a.path_case, PathCase::kTrivial);
  const PathSolution b = SolvePath(Scenario(UnitPath(6), 4, 4, {{4, 4}}));
  EXPECT_EQ(b.ride.waypoints(), (std::vector<Node>{4}));
  EXPECT_EQ(b.cost, Weight(0));
}

TEST(SolvePath, RejectsOtherTopologies) {
  const Scenario s(testing::CycleOf({1, 1, 1}), 1, 2, {{2, 3}});
  EXPECT_THROW(SolvePath(s), ContractError);
}

TEST(SolvePath, RationalWeights) {
  auto g = std::make_shared<const Graph>(Graph::Path(
      {Weight::Parse("1/2"), Weight::Parse("1/3"), Weight::Parse("1/6")}));
  const Scenario s(g, 1, 4, {{3, 1}});
  // 1 -> 3 -> 1 -> 4: 5/6 + 5/6 + 1.
  EXPECT_EQ(SolvePath(s).cost, Weight::Parse("8/3"));
}

TEST(SolvePath, MatchesOracleByStratum) {
  Rng rng(8);
  for (PathStratum stratum : testing::kAllStrata) {
    for (int iter = 0; iter < 150; ++iter) {
      const Scenario s = testing::RandomPath(rng, stratum, 9, 5);
      const PathSolution sol = SolvePath(s);
      const OracleResult o = BruteForceOptimal(s);
      ASSERT_TRUE(o.feasible);
      ASSERT_EQ(sol.cost, o.cost) << testing::StratumName(stratum) << " "
                                  << ToString(sol.ride) << " " << EmitInstance(s);
    }
  }
}

}  // namespace
}  // namespace rideshare
