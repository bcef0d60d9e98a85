#ifndef RIDESHARE_PATH_SOLVER_H_
#define RIDESHARE_PATH_SOLVER_H_

#include <string_view>
#include <vector>

#include "rideshare/graph.h"
#include "rideshare/ride.h"
#include "rideshare/weight.h"

namespace rideshare {

// Which branch of the path algorithm handles a scenario.
//
// kOuterForward:  start <= left <= right <= end.
// kOuterReversed: end <= left <= right <= start.
// kTrivial:       left == right and not outer; the ride is start -> v -> end.
// kInnerOrBoundary: everything else. This covers start or end strictly inside
//   (left, right) and also both of them on the same side of the requests.
enum class PathCase { kOuterForward, kOuterReversed, kTrivial, kInnerOrBoundary };

std::string_view PathCaseName(PathCase c);

PathCase Classify(const Scenario& scenario);

// Optimal ride for an outer scenario: start -> s1 -> t1 -> ... -> sh -> th ->
// end over the normal form of the requests. A reversed scenario is solved on
// its mirror image. Throws ContractError if the scenario is not outer.
Ride SolveOuter(const Scenario& scenario);

// The (M, m)-canonical ride: start -> M -> left -> right -> m -> end when
// m <= M; otherwise start -> M -> left -> M, then an optimal ride from M to m
// serving the requests inside [M, m], then -> right -> m -> end.
// Throws DomainError if M or m is outside 1..n.
Ride CanonicalRide(const Scenario& scenario, Node turn_before_left,
                   Node turn_after_right);

// (M^, m^): M^ is the smallest x in {start} u V_C with x >= start that no
// request (s,t) straddles as t <= x < s; m^ is the largest y in {end} u V_C
// with y <= end that no request straddles as t < y <= s.
struct CanonicalPair {
  Node turn_before_left = 0;
  Node turn_after_right = 0;

  friend bool operator==(const CanonicalPair&, const CanonicalPair&) = default;
};
CanonicalPair PhaseOneBounds(const Scenario& scenario);

// For every landmark m <= end, the smallest M >= max(m, start) such that no
// request (s,t) has t < m and s > M.
struct TurnPoint {
  Node turn_after_right = 0;   // m
  Node turn_before_left = 0;   // M^_m

  friend bool operator==(const TurnPoint&, const TurnPoint&) = default;
};
std::vector<TurnPoint> InnerTurnMap(const Scenario& scenario);

struct InnerCandidates {
  CanonicalPair phase_one;
  std::vector<TurnPoint> turn_map;
};
InnerCandidates ComputeInnerCandidates(const Scenario& scenario);

// Best canonical ride over the candidates above, for the scenario and for its
// mirror image. Always feasible; optimal whenever start or end lies strictly
// inside (left, right). Requires left < right.
Ride SolveInner(const Scenario& scenario);
Ride SolveInner(const Scenario& scenario, const PrefixTable& table);

struct PathSolution {
  Ride ride;
  Weight cost;
  PathCase path_case;
};

// Optimal ride and its exact cost for a path scenario. The ride is checked
// for feasibility before returning; a failed check throws InternalError.
// The table overload lets callers reuse prefix sums across many scenarios on
// one graph; it then runs in O(|C| log |C|) independent of n.
PathSolution SolvePath(const Scenario& scenario);
PathSolution SolvePath(const Scenario& scenario, const PrefixTable& table);

}  // namespace rideshare

#endif  // RIDESHARE_PATH_SOLVER_H_
