// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Limits and sample counts are fixed below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "rideshare/cycle_solver.h"
#include "rideshare/generator.h"
#include "rideshare/normalize.h"
#include "rideshare/oracle.h"
#include "rideshare/path_solver.h"
#include "testing.h"

namespace rideshare {
namespace {

using testing::PathStratum;

constexpr double kSixNodeSeconds = 1.0;
constexpr int kPathInstances = 1000;
constexpr double kPathSuiteSeconds = 60.0;
constexpr int kCycleInstances = 500;
constexpr double kCycleSuiteSeconds = 120.0;
constexpr int kNormalizeInstances = 300;
constexpr int kSweepInstances = 1000;
constexpr double kPathScalingRatio = 2.5;
constexpr double kPathLargeSeconds = 5.0;
constexpr double kCycleScalingRatio = 5.0;
constexpr double kCycleLargeSeconds = 10.0;
constexpr int kTimingReps = 9;

double Seconds(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double Median(std::vector<double> t) {
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

// Median times of two workloads, run alternately so that load changes on
// the machine hit both alike.
std::pair<double, double> PairedMedians(const std::function<void()>& small,
                                        const std::function<void()>& large) {
  std::vector<double> ts, tl;
  for (int i = 0; i < kTimingReps; ++i) {
    ts.push_back(Seconds(small));
    tl.push_back(Seconds(large));
  }
  return {Median(ts), Median(tl)};
}

int failures = 0;

void Report(int id, bool pass, const std::string& detail) {
  std::printf("%s  %2d  %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string Fmt(const char* format, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

// Tallies for criterion 10, filled in by the other criteria as they go.
struct Invariants {
  long checks = 0;
  long violations = 0;
  void Check(bool ok) {
    ++checks;
    violations += !ok;
  }
} invariants;

void SixNodeOracle() {
  const Scenario s(testing::SixNodeGraph(), 1, 2, {{1, 5}, {6, 2}});
  OracleResult r;
  const double t = Seconds([&] { r = BruteForceOptimal(s); });
  const bool ok = r.feasible && r.cost == Weight(5) && IsFeasible(r.ride->waypoints(), s) &&
                  t < kSixNodeSeconds;
  Report(1, ok, "six-node graph: oracle cost " + (r.feasible ? r.cost.ToString() : "none") +
                    " (expected 5), " + Fmt("%.4f s (limit %.0f s)", t, kSixNodeSeconds));
}

void SevenRequestPath() {
  const std::vector<Request> c = {{2, 3}, {4, 4}, {4, 2}, {3, 1}, {2, 1}, {6, 5}, {5, 7}};
  const std::vector<Request> expected = {{4, 1}, {6, 5}};
  const bool sweep = Normalize(c, 1, 7).pairs == expected;
  const bool naive = NormalizeNaive(c, 1, 7).pairs == expected;
  Report(2, sweep && naive,
         std::string("seven requests: normal form {(4,1),(6,5)}: sweep ") + (sweep ? "ok" : "wrong") +
             ", fixpoint " + (naive ? "ok" : "wrong"));
}

void SevenRequestRide() {
  const Scenario s(testing::UnitPath(7), 1, 7, {{2, 3}, {4, 4}, {4, 2}, {3, 1}, {2, 1}, {6, 5}, {5, 7}});
  const PathSolution sol = SolvePath(s);
  const bool ok = sol.cost == Weight(14) && IsFeasible(ExpandOnLine(sol.ride), s);
  Report(3, ok, "seven requests: ride " + ToString(sol.ride) + " cost " + sol.cost.ToString() +
                    " (expected 14)");
}

void PathOracle() {
  Rng rng(20240401);
  int mismatches = 0;
  std::vector<int> per_stratum(5, 0);
  const double t = Seconds([&] {
    for (int i = 0; i < kPathInstances; ++i) {
      const PathStratum stratum = testing::kAllStrata[i % 5];
      const Scenario s = testing::RandomPath(rng, stratum, 12, 6, 5);
      const PathSolution sol = SolvePath(s);
      const OracleResult o = BruteForceOptimal(s);
      invariants.Check(IsFeasible(ExpandOnLine(sol.ride), s).ok());
      if (!o.feasible || o.cost != sol.cost) {
        ++mismatches;
        std::printf("      mismatch (%s): solver %s oracle %s\n", testing::StratumName(stratum).c_str(),
                    sol.cost.ToString().c_str(), o.cost.ToString().c_str());
      }
      ++per_stratum[i % 5];
    }
  });
  Report(4, mismatches == 0 && t < kPathSuiteSeconds,
         Fmt("path vs oracle: %.0f instances (%.0f per stratum), ", kPathInstances, per_stratum[0]) +
             std::to_string(mismatches) + " mismatches, " +
             Fmt("%.2f s (limit %.0f s)", t, kPathSuiteSeconds));
}

void CycleOracle() {
  Rng rng(20240402);
  int mismatches = 0;
  const double t = Seconds([&] {
    for (int i = 0; i < kCycleInstances; ++i) {
      const Scenario s = testing::RandomCycle(rng, 10, 5, 5);
      const CycleSolution sol = SolveCycle(s);
      const OracleResult o = BruteForceOptimal(s);
      invariants.Check(IsFeasible(sol.ride.waypoints(), s).ok());
      if (!o.feasible || o.cost != sol.cost) ++mismatches;
    }
  });
  Report(5, mismatches == 0 && t < kCycleSuiteSeconds,
         Fmt("cycle vs oracle: %.0f instances, ", kCycleInstances) + std::to_string(mismatches) +
             " mismatches, " + Fmt("%.2f s (limit %.0f s)", t, kCycleSuiteSeconds));
}

void NormalizeKeepsOptimum() {
  Rng rng(20240403);
  int mismatches = 0;
  for (int i = 0; i < kNormalizeInstances; ++i) {
    const PathStratum stratum = i % 2 ? PathStratum::kOuterForward : PathStratum::kOuterReversed;
    const Scenario s = testing::RandomPath(rng, stratum, 12, 6, 5);
    // Normalize works left to right; reversed instances go through the mirror.
    const bool reversed = s.start() > s.end();
    const Scenario forward = reversed ? Symmetrize(s) : s;
    std::vector<Request> reduced = Normalize(forward.requests(), forward.start(), forward.end()).pairs;
    if (reduced.empty()) reduced.push_back({forward.start(), forward.start()});
    if (BruteForceOptimal(testing::WithRequests(forward, reduced)).cost != BruteForceOptimal(s).cost) {
      ++mismatches;
    }
  }
  Report(6, mismatches == 0,
         Fmt("normal form keeps the optimum: %.0f outer instances, ", kNormalizeInstances) +
             std::to_string(mismatches) + " mismatches");
}

void SweepsMatchDefinitions() {
  Rng rng(20240404);
  int normalize_bad = 0, phase1_bad = 0, map_bad = 0;
  for (int i = 0; i < kSweepInstances; ++i) {
    const Node n = static_cast<Node>(rng.Uniform(1, 30));
    std::vector<Request> c;
    for (int k = static_cast<int>(rng.Uniform(1, 12)); k > 0; --k) {
      c.push_back({static_cast<Node>(rng.Uniform(1, n)), static_cast<Node>(rng.Uniform(1, n))});
    }
    const NormalForm nf = Normalize(c, 1, n);
    normalize_bad += !(nf.IsWellFormed() && nf == NormalizeNaive(c, 1, n));
  }
  for (int i = 0; i < kSweepInstances; ++i) {
    const Scenario s = testing::RandomPath(rng, i % 2 ? PathStratum::kInner : PathStratum::kSameSide, 20, 8);
    const CanonicalPair p = PhaseOneBounds(s);
    phase1_bad += p.turn_before_left != testing::NaiveTurnBeforeLeft(s) ||
                  p.turn_after_right != testing::NaiveTurnAfterRight(s);
  }
  for (int i = 0; i < kSweepInstances; ++i) {
    const Scenario s = testing::RandomPath(rng, testing::kAllStrata[i % 5], 20, 8);
    bool ok = true;
    std::size_t expected = 0;
    for (Node m : s.Landmarks()) expected += m <= s.end();
    const std::vector<TurnPoint> map = InnerTurnMap(s);
    ok &= map.size() == expected;
    for (const TurnPoint& tp : map) {
      ok &= tp.turn_before_left == testing::NaiveTurnForM(s, tp.turn_after_right);
    }
    map_bad += !ok;
  }
  Report(7, normalize_bad + phase1_bad + map_bad == 0,
         Fmt("sweeps vs definitions over %.0f instances each: normalize %.0f, phase one %.0f, ",
             kSweepInstances, normalize_bad, phase1_bad) +
             std::to_string(map_bad) + " turn-map disagreements");
}

Scenario UnitPathInstance(Node n, int h, std::uint64_t seed) {
  GeneratorOptions o;
  o.n = n;
  o.requests = h;
  o.seed = seed;
  return Generate(o);
}

void PathScaling() {
  const Scenario small = UnitPathInstance(1'000'000, 100'000, 1);
  const Scenario large = UnitPathInstance(2'000'000, 200'000, 1);
  SolvePath(small);  // warm-up
  const auto [t_small, t_large] =
      PairedMedians([&] { SolvePath(small); }, [&] { SolvePath(large); });
  const double ratio = t_large / t_small;
  Report(8, ratio <= kPathScalingRatio && t_large < kPathLargeSeconds,
         Fmt("path scaling: median %.3f s at (1e6, 1e5), %.3f s at (2e6, 2e5), ratio %.2f", t_small,
             t_large, ratio) +
             Fmt(" (limits %.1f, %.0f s)", kPathScalingRatio, kPathLargeSeconds));
}

Scenario CycleInstance(Node endpoints, std::uint64_t seed) {
  GeneratorOptions o;
  o.topology = Topology::kCycle;
  o.n = 2000;
  o.endpoints = endpoints;
  o.requests = endpoints;
  o.max_weight = 10;
  o.seed = seed;
  return Generate(o);
}

void CycleScaling() {
  const Scenario small = CycleInstance(25, 3);
  const Scenario large = CycleInstance(50, 3);
  SolveCycle(small);  // warm-up
  const auto [t_small, t_large] =
      PairedMedians([&] { SolveCycle(small); }, [&] { SolveCycle(large); });
  const double ratio = t_large / t_small;
  Report(9, ratio <= kCycleScalingRatio && t_large < kCycleLargeSeconds,
         Fmt("cycle scaling at n=2000: median %.3f s with |V_C|=25, %.3f s with |V_C|=50, ratio %.2f",
             t_small, t_large, ratio) +
             Fmt(" (limits %.1f, %.0f s)", kCycleScalingRatio, kCycleLargeSeconds));
}

void InvariantSuites() {
  Rng rng(20240405);
  const Weight factor = Weight::Parse("7/4");
  for (int i = 0; i < 1000; ++i) {
    const Scenario s = testing::RandomPath(rng, testing::kAllStrata[i % 5], 12, 6, 5);
    const PathSolution sol = SolvePath(s);
    invariants.Check(IsFeasible(ExpandOnLine(sol.ride), s).ok());
    invariants.Check(SolvePath(Symmetrize(s)).cost == sol.cost);
    invariants.Check(SolvePath(testing::ScaleWeights(s, factor)).cost == sol.cost * factor);
    std::vector<Request> more = s.requests();
    more.push_back({static_cast<Node>(rng.Uniform(1, s.n())), static_cast<Node>(rng.Uniform(1, s.n()))});
    const Scenario bigger = testing::WithRequests(s, more);
    const Weight bigger_cost = SolvePath(bigger).cost;
    invariants.Check(sol.cost <= bigger_cost);
    if (bigger.requests().size() <= 6) invariants.Check(bigger_cost == BruteForceOptimal(bigger).cost);
  }
  for (int i = 0; i < 300; ++i) {
    const Scenario s = testing::RandomCycle(rng, 10, 5, 5);
    const CycleSolution sol = SolveCycle(s);
    invariants.Check(IsFeasible(sol.ride.waypoints(), s).ok());
    const Node shift = static_cast<Node>(rng.Uniform(1, s.n() - 1));
    invariants.Check(SolveCycle(testing::RotateCycle(s, shift)).cost == sol.cost);
    invariants.Check(SolveCycle(testing::ScaleWeights(s, factor)).cost == sol.cost * factor);
  }
  Report(10, invariants.violations == 0,
         "invariant suites (feasibility, symmetry, scaling, monotonicity, rotation): " +
             std::to_string(invariants.checks) + " checks, " + std::to_string(invariants.violations) +
             " violations");
}

}  // namespace
}  // namespace rideshare

int main() {
  using namespace rideshare;
  SixNodeOracle();
  SevenRequestPath();
  SevenRequestRide();
  PathOracle();
  CycleOracle();
  NormalizeKeepsOptimum();
  SweepsMatchDefinitions();
  PathScaling();
  CycleScaling();
  InvariantSuites();
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
