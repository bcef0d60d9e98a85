#ifndef RIDESHARE_CYCLE_SOLVER_H_
#define RIDESHARE_CYCLE_SOLVER_H_

#include <cstdint>
#include <memory>
#include <vector>

#include "rideshare/graph.h"
#include "rideshare/ride.h"
#include "rideshare/weight.h"

namespace rideshare {

// The 3n-node path whose node v stands for cycle node Wrap(v, n); edge
// {v, v+1} costs as much as the cycle edge {Wrap(v), Wrap(v+1)}.
std::shared_ptr<const Graph> UnrolledPath(const Graph& cycle);

// Unrolled nodes in [alpha, beta] whose residue occurs only once in that
// window, as an inclusive range. Empty (first > last) when the window wraps
// around twice or more.
struct WindowRange {
  std::int64_t first = 1;
  std::int64_t last = 0;

  bool empty() const { return first > last; }
  std::vector<Node> Nodes() const;
};
WindowRange WindowNodes(std::int64_t alpha, std::int64_t beta, Node n);

enum class Direction { kForward, kBackward };  // (alpha, beta) or (beta, alpha)

struct Tuple {
  Node alpha = 0;
  Node beta = 0;
  Node v_start = 0;
  Node v_end = 0;
  Direction direction = Direction::kForward;

  friend bool operator==(const Tuple&, const Tuple&) = default;
};

struct UnrolledScenario {
  std::shared_ptr<const Graph> path;  // 3n nodes
  Tuple tuple;
  Request direction_request;
  std::vector<Request> lifted;  // without the direction request

  // Path scenario on `path` with the lifted requests plus the direction one.
  Scenario ToScenario() const;
};

// Throws TupleRejectedError unless: alpha in 1..n, beta in alpha..3n, both
// wrap onto V_C u {start, end}, every node of that set has a representative
// in [alpha, beta], and v_start, v_end lie in [alpha, beta] over start, end.
// The overload with `path` reuses an UnrolledPath of the scenario's cycle.
UnrolledScenario Unroll(const Scenario& cycle, const Tuple& tuple);
UnrolledScenario Unroll(const Scenario& cycle, const Tuple& tuple,
                        std::shared_ptr<const Graph> path);

// Every tuple passing the checks above, ordered by alpha, beta, v_start,
// v_end, direction. Meant for scenarios with start == 1 (see SolveCycle).
std::vector<Tuple> EnumerateTuples(const Scenario& cycle);

struct CycleOptions {
  // Skip tuples whose lower bound already reaches the best cost found. The
  // bounds cover the window ends in the requested order plus the longest
  // lifted request running the other way.
  bool prune = true;
  // Project and check every tuple's ride, not only the winner's.
  bool check_every_tuple = false;
};

struct CycleStats {
  std::int64_t tuples = 0;
  std::int64_t solved = 0;
};

struct CycleSolution {
  Ride ride;  // fully expanded walk on the cycle
  Weight cost;
  CycleStats stats;
};

// Optimal ride on a cycle scenario. Labels are rotated so that start == 1,
// every tuple's unrolled scenario is solved on the path, and the cheapest
// ride is projected back onto the cycle and checked.
CycleSolution SolveCycle(const Scenario& cycle, const CycleOptions& options = {});

}  // namespace rideshare

#endif  // RIDESHARE_CYCLE_SOLVER_H_
