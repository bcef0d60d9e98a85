#include <gtest/gtest.h>

#include "rideshare/cycle_solver.h"
#include "rideshare/errors.h"
#include "rideshare/oracle.h"
#include "testing.h"

namespace rideshare {
namespace {

using testing::CycleOf;

TEST(WindowNodes, ThreeCases) {
  EXPECT_EQ(WindowNodes(2, 5, 4).Nodes(), (std::vector<Node>{2, 3, 4, 5}));
  EXPECT_EQ(WindowNodes(2, 8, 4).Nodes(), (std::vector<Node>{5}));
  EXPECT_TRUE(WindowNodes(1, 9, 4).empty());
}

TEST(WindowNodes, MatchesDefinition) {
  for (Node n = 3; n <= 7; ++n) {
    for (Node alpha = 1; alpha <= n; ++alpha) {
      for (Node beta = alpha; beta <= 3 * n; ++beta) {
        std::vector<Node> expected;
        for (Node v = alpha; v <= beta; ++v) {
          int copies = 0;
          for (Node u = alpha; u <= beta; ++u) copies += Wrap(u, n) == Wrap(v, n);
          if (copies == 1) expected.push_back(v);
        }
        ASSERT_EQ(WindowNodes(alpha, beta, n).Nodes(), expected)
            << n << " " << alpha << " " << beta;
      }
    }
  }
}

TEST(UnrolledPath, RepeatsWeights) {
  const auto path = UnrolledPath(*CycleOf({1, 2, 3}));
  ASSERT_EQ(path->n(), 9);
  EXPECT_EQ(path->EdgeWeight(3, 4), Weight(3));
  EXPECT_EQ(path->EdgeWeight(4, 5), Weight(1));
  EXPECT_EQ(path->EdgeWeight(8, 9), Weight(2));
}

TEST(Unroll, LiftsRequestsInsideWindow) {
  const Scenario s(CycleOf({1, 1, 1, 1}), 1, 1, {{2, 4}, {3, 1}});
  const UnrolledScenario u = Unroll(s, {1, 5, 1, 5, Direction::kBackward});
  EXPECT_EQ(u.direction_request, (Request{5, 1}));
  // Window 1..5 holds residues 2, 3, 4 once; residue 1 twice.
  EXPECT_EQ(u.lifted, (std::vector<Request>{{2, 4}}));
  EXPECT_THROW(Unroll(s, {2, 4, 4, 4, Direction::kForward}), TupleRejectedError);
  EXPECT_THROW(Unroll(s, {1, 3, 1, 1, Direction::kForward}), TupleRejectedError);
  EXPECT_THROW(Unroll(s, {1, 5, 1, 2, Direction::kForward}), TupleRejectedError);
}

TEST(EnumerateTuples, SmallExample) {
  const Scenario s(CycleOf({1, 1, 1}), 1, 1, {{2, 3}});
  const std::vector<Tuple> tuples = EnumerateTuples(s);
  EXPECT_NE(std::find(tuples.begin(), tuples.end(), Tuple{1, 3, 1, 1, Direction::kForward}), tuples.end());
  EXPECT_NE(std::find(tuples.begin(), tuples.end(), Tuple{1, 3, 1, 1, Direction::kBackward}), tuples.end());
}

TEST(EnumerateTuples, MatchesNaiveScanAndBound) {
  Rng rng(17);
  for (int iter = 0; iter < 150; ++iter) {
    Scenario s = testing::RandomCycle(rng, 8, 4);
    s = testing::RotateCycle(s, 1 - s.start());
    ASSERT_EQ(s.start(), 1);
    const std::vector<Tuple> tuples = EnumerateTuples(s);
    ASSERT_EQ(tuples, testing::NaiveTuples(s));
    const std::int64_t k = static_cast<std::int64_t>(s.Landmarks().size());
    ASSERT_LE(static_cast<std::int64_t>(tuples.size()), 9 * (3 * k) * (3 * k));
    for (const Tuple& t : tuples) ASSERT_NO_THROW(Unroll(s, t));
  }
}

TEST(SolveCycle, Examples) {
  const CycleSolution a = SolveCycle(Scenario(CycleOf({1, 1, 1, 1}), 1, 1, {{2, 4}}));
  EXPECT_EQ(a.cost, Weight(4));
  const CycleSolution b = SolveCycle(Scenario(CycleOf({1, 1, 10}), 1, 3, {{2, 3}}));
  EXPECT_EQ(b.cost, Weight(2));
  EXPECT_EQ(b.ride.waypoints(), (std::vector<Node>{1, 2, 3}));
  const CycleSolution c = SolveCycle(Scenario(CycleOf({2, 3, 4}), 1, 1, {{1, 1}}));
  EXPECT_EQ(c.ride.waypoints(), (std::vector<Node>{1}));
  EXPECT_EQ(c.cost, Weight(0));
}

TEST(SolveCycle, StartNotAtOne) {
  // Cheap arc 3-4-5, expensive edges elsewhere.
  const Scenario s(CycleOf({9, 9, 1, 1, 9}), 4, 4, {{5, 3}});
  const CycleSolution sol = SolveCycle(s);
  EXPECT_EQ(sol.cost, Weight(4));
  EXPECT_TRUE(IsFeasible(sol.ride.waypoints(), s));
}

TEST(SolveCycle, RejectsPaths) {
  EXPECT_THROW(SolveCycle(Scenario(testing::UnitPath(3), 1, 2, {{2, 3}})), ContractError);
}

TEST(SolveCycle, EveryTupleProjectsToFeasibleRide) {
  Rng rng(23);
  CycleOptions options;
  options.check_every_tuple = true;
  options.prune = false;
  for (int iter = 0; iter < 100; ++iter) {
    const Scenario s = testing::RandomCycle(rng, 8, 4);
    const CycleSolution checked = SolveCycle(s, options);
    EXPECT_EQ(checked.stats.solved, checked.stats.tuples);
    ASSERT_EQ(checked.cost, SolveCycle(s).cost);
  }
}

TEST(SolveCycle, MatchesOracle) {
  Rng rng(29);
  for (int iter = 0; iter < 200; ++iter) {
    const Scenario s = testing::RandomCycle(rng, 9, 4);
    const CycleSolution sol = SolveCycle(s);
    ASSERT_EQ(sol.cost, BruteForceOptimal(s).cost) << ToString(sol.ride);
  }
}

// Oracle rides, lifted by their lap count, are feasible for the unrolled
// scenario spanned by their extremes.
TEST(VirtualNodes, OracleRidesLiftToUnrolledScenario) {
  Rng rng(37);
  int checked = 0;
  for (int iter = 0; iter < 300; ++iter) {
    Scenario s = testing::RandomCycle(rng, 8, 4, 3);
    s = testing::RotateCycle(s, 1 - s.start());
    const OracleResult o = BruteForceOptimal(s);
    const std::vector<Node>& walk = o.ride->waypoints();
    const Node n = s.n();
    const std::vector<std::int64_t> tau = testing::VirtualNodes(walk, n);
    for (std::size_t i = 0; i < walk.size(); ++i) ASSERT_EQ(Wrap(tau[i], n), walk[i]);
    const auto [lo_it, hi_it] = std::minmax_element(tau.begin(), tau.end());
    const std::int64_t alpha = *lo_it, beta = *hi_it;
    ASSERT_GE(alpha, 1);
    ASSERT_LE(alpha, n);
    if (beta > 3 * n) continue;
    const bool forward = (lo_it - tau.begin()) <= (std::find(tau.begin(), tau.end(), beta) - tau.begin());

    const WindowRange window = WindowNodes(alpha, beta, n);
    std::vector<Request> lifted;
    for (const Request& r : s.requests()) {
      for (std::int64_t vs = window.first; vs <= window.last; ++vs) {
        for (std::int64_t vt = window.first; vt <= window.last; ++vt) {
          if (Wrap(vs, n) == r.origin && Wrap(vt, n) == r.destination) {
            lifted.push_back({static_cast<Node>(vs), static_cast<Node>(vt)});
          }
        }
      }
    }
    lifted.push_back(forward ? Request{static_cast<Node>(alpha), static_cast<Node>(beta)}
                             : Request{static_cast<Node>(beta), static_cast<Node>(alpha)});
    const Scenario unrolled(UnrolledPath(s.graph()), static_cast<Node>(tau.front()),
                            static_cast<Node>(tau.back()), lifted);
    std::vector<Node> lifted_walk(tau.begin(), tau.end());
    ASSERT_TRUE(IsFeasible(lifted_walk, unrolled));
    ++checked;
  }
  EXPECT_GT(checked, 250);
}

}  // namespace
}  // namespace rideshare
