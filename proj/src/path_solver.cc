#include "rideshare/path_solver.h"

#include <algorithm>
#include <functional>
#include <optional>
#include <queue>
#include <string>

#include "rideshare/errors.h"
#include "rideshare/minmax_heap.h"
#include "rideshare/normalize.h"

namespace rideshare {
namespace {

// `sorted` (ascending, unique) with `v` added.
std::vector<Node> WithNode(const std::vector<Node>& sorted, Node v) {
  std::vector<Node> out;
  out.reserve(sorted.size() + 1);
  const auto pos = std::lower_bound(sorted.begin(), sorted.end(), v);
  out.insert(out.end(), sorted.begin(), pos);
  if (pos == sorted.end() || *pos != v) out.push_back(v);
  out.insert(out.end(), pos, sorted.end());
  return out;
}

// The part of a path scenario the algorithms look at. Mirroring one of these
// is cheap, unlike mirroring a Scenario (which would copy the weights).
struct LineInstance {
  Node n = 0;
  Node start = 0;
  Node end = 0;
  std::vector<Request> requests;  // sorted, unique
  std::vector<Node> endpoints;    // V_C

  Node left() const { return endpoints.front(); }
  Node right() const { return endpoints.back(); }
  std::vector<Node> Landmarks() const {
    return WithNode(WithNode(endpoints, start), end);
  }
};

LineInstance FromScenario(const Scenario& s) {
  return {s.n(), s.start(), s.end(), s.requests(), s.endpoints()};
}

LineInstance MirrorOf(const LineInstance& in) {
  LineInstance out;
  out.n = in.n;
  out.start = Mirror(in.start, in.n);
  out.end = Mirror(in.end, in.n);
  // Reversing a sorted request list and mirroring it keeps it sorted.
  out.requests.reserve(in.requests.size());
  for (auto it = in.requests.rbegin(); it != in.requests.rend(); ++it) {
    out.requests.push_back({Mirror(it->origin, in.n), Mirror(it->destination, in.n)});
  }
  out.endpoints.reserve(in.endpoints.size());
  for (auto it = in.endpoints.rbegin(); it != in.endpoints.rend(); ++it) {
    out.endpoints.push_back(Mirror(*it, in.n));
  }
  return out;
}

void MirrorInPlace(std::vector<Node>& waypoints, Node n) {
  for (Node& v : waypoints) v = Mirror(v, n);
}

void RequirePath(const Scenario& scenario) {
  if (scenario.graph().topology() != Topology::kPath) {
    throw ContractError("path solver needs a path graph, got " +
                        std::string(TopologyName(scenario.graph().topology())));
  }
}

PathCase ClassifyLine(Node start, Node end, Node left, Node right) {
  if (start <= left && right <= end) return PathCase::kOuterForward;
  if (end <= left && right <= start) return PathCase::kOuterReversed;
  if (left == right) return PathCase::kTrivial;
  return PathCase::kInnerOrBoundary;
}

// start -> s1 -> t1 -> ... -> sh -> th -> end, for start <= end and every
// request inside [start, end].
std::vector<Node> ForwardOuterWaypoints(Node start, Node end,
                                        std::span<const Request> requests) {
  const NormalForm normal = Normalize(requests, start, end);
  std::vector<Node> wp;
  wp.reserve(2 * normal.pairs.size() + 2);
  wp.push_back(start);
  for (const Request& r : normal.pairs) {
    wp.push_back(r.origin);
    wp.push_back(r.destination);
  }
  wp.push_back(end);
  return wp;
}

std::vector<Node> OuterWaypoints(const LineInstance& in) {
  if (in.start <= in.end) {
    return ForwardOuterWaypoints(in.start, in.end, in.requests);
  }
  const LineInstance mirror = MirrorOf(in);
  std::vector<Node> wp =
      ForwardOuterWaypoints(mirror.start, mirror.end, mirror.requests);
  MirrorInPlace(wp, in.n);
  return wp;
}

std::vector<Node> CanonicalWaypoints(const LineInstance& in, Node big_m,
                                     Node small_m) {
  if (small_m <= big_m) {
    return {in.start, big_m, in.left(), in.right(), small_m, in.end};
  }
  std::vector<Request> inside;
  for (const Request& r : in.requests) {
    if (std::min(r.origin, r.destination) >= big_m &&
        std::max(r.origin, r.destination) <= small_m) {
      inside.push_back(r);
    }
  }
  std::vector<Node> wp = {in.start, big_m, in.left()};
  const std::vector<Node> middle =
      ForwardOuterWaypoints(big_m, small_m, inside);
  wp.insert(wp.end(), middle.begin(), middle.end());
  wp.push_back(in.right());
  wp.push_back(small_m);
  wp.push_back(in.end);
  return wp;
}

// The (M, m)-canonical ride for M < m without its two possible detours:
// M -> left -> M when M <= left, and right -> m when m >= right. In either
// case the inner ride already sweeps past that extreme, and keeping the
// detour can cost more than the optimum.
std::vector<Node> PhaseOneWaypoints(const LineInstance& in, Node big_m,
                                    Node small_m) {
  std::vector<Node> wp = CanonicalWaypoints(in, big_m, small_m);
  if (small_m >= in.right()) {
    // ..., small_m, right, small_m, end  ->  ..., small_m, end
    wp.erase(wp.end() - 3, wp.end() - 1);
  }
  if (big_m <= in.left()) {
    // start, big_m, left, big_m, ...  ->  start, big_m, ...
    wp.erase(wp.begin() + 2, wp.begin() + 4);
  }
  return wp;
}

std::vector<Request> BackwardOnly(const std::vector<Request>& requests) {
  std::vector<Request> out;
  for (const Request& r : requests) {
    if (r.IsBackward()) out.push_back(r);
  }
  return out;
}

CanonicalPair PhaseOne(const LineInstance& in) {
  std::vector<Request> backward = BackwardOnly(in.requests);
  CanonicalPair out;

  // M^: ascending sweep; `pending` holds origins of requests with t <= x < s.
  {
    std::sort(backward.begin(), backward.end(),
              [](const Request& a, const Request& b) {
                return a.destination < b.destination;
              });
    const std::vector<Node> candidates = WithNode(in.endpoints, in.start);
    std::priority_queue<Node, std::vector<Node>, std::greater<>> pending;
    std::size_t next = 0;
    std::optional<Node> found;
    for (Node x : candidates) {
      while (next < backward.size() && backward[next].destination <= x) {
        pending.push(backward[next++].origin);
      }
      while (!pending.empty() && pending.top() <= x) pending.pop();
      if (x >= in.start && pending.empty()) {
        found = x;
        break;
      }
    }
    if (!found) throw InternalError("no candidate for the left turn point");
    out.turn_before_left = *found;
  }

  // m^: descending sweep; `pending` holds destinations of requests with
  // t < y <= s, as a max-heap.
  {
    // `in.requests` is sorted by origin, so the backward ones are too.
    backward = BackwardOnly(in.requests);
    std::reverse(backward.begin(), backward.end());
    std::vector<Node> candidates = WithNode(in.endpoints, in.end);
    std::reverse(candidates.begin(), candidates.end());
    std::priority_queue<Node> pending;
    std::size_t next = 0;
    std::optional<Node> found;
    for (Node y : candidates) {
      while (next < backward.size() && backward[next].origin >= y) {
        pending.push(backward[next++].destination);
      }
      while (!pending.empty() && pending.top() >= y) pending.pop();
      if (y <= in.end && pending.empty()) {
        found = y;
        break;
      }
    }
    if (!found) throw InternalError("no candidate for the right turn point");
    out.turn_after_right = *found;
  }
  return out;
}

std::vector<TurnPoint> TurnMap(const LineInstance& in) {
  std::vector<Request> backward = BackwardOnly(in.requests);
  std::sort(backward.begin(), backward.end(),
            [](const Request& a, const Request& b) {
              return a.destination < b.destination;
            });
  // Origins of requests with t' < m < s'.
  MinMaxHeap<Node> spanning;
  std::size_t next = 0;
  const std::vector<Node> landmarks = in.Landmarks();
  std::vector<TurnPoint> out;
  out.reserve(landmarks.size());
  for (Node m : landmarks) {
    if (m > in.end) break;
    while (next < backward.size() && backward[next].destination < m) {
      spanning.push(backward[next++].origin);
    }
    while (!spanning.empty() && spanning.min() <= m) spanning.pop_min();
    const Node big_m = spanning.empty() ? std::max(m, in.start)
                                        : std::max(in.start, spanning.max());
    out.push_back({m, big_m});
  }
  return out;
}

class BestRide {
 public:
  void Offer(std::span<const Node> waypoints, Weight cost) {
    if (!best_cost_ || cost < *best_cost_) {
      best_cost_ = std::move(cost);
      best_.assign(waypoints.begin(), waypoints.end());
    }
  }
  bool has_value() const { return best_cost_.has_value(); }
  std::vector<Node>& waypoints() { return best_; }

 private:
  std::optional<Weight> best_cost_;
  std::vector<Node> best_;
};

Weight WaypointCost(std::span<const Node> wp, const PrefixTable& table) {
  Weight total;
  for (std::size_t i = 1; i < wp.size(); ++i) {
    total += table.Distance(wp[i - 1], wp[i]);
  }
  return total;
}

// Phases I and II on `frame`. When `mirrored`, candidates are mapped back to
// the original labels before being costed and offered.
void OfferCanonicalCandidates(const LineInstance& frame, bool mirrored,
                              const PrefixTable& table, BestRide& best) {
  auto offer = [&](std::span<Node> wp) {
    if (mirrored) {
      for (Node& v : wp) v = Mirror(v, frame.n);
    }
    best.Offer(wp, WaypointCost(wp, table));
  };
  const CanonicalPair pair = PhaseOne(frame);
  if (pair.turn_before_left < pair.turn_after_right) {
    std::vector<Node> wp =
        PhaseOneWaypoints(frame, pair.turn_before_left, pair.turn_after_right);
    offer(wp);
  }
  for (const TurnPoint& tp : TurnMap(frame)) {
    Node wp[] = {frame.start, tp.turn_before_left, frame.left(), frame.right(),
                 tp.turn_after_right, frame.end};
    offer(wp);
  }
}

std::vector<Node> InnerWaypoints(const LineInstance& in,
                                 const PrefixTable& table) {
  if (in.left() >= in.right()) {
    throw ContractError("inner solver needs left < right");
  }
  BestRide best;
  OfferCanonicalCandidates(in, /*mirrored=*/false, table, best);
  OfferCanonicalCandidates(MirrorOf(in), /*mirrored=*/true, table, best);
  return std::move(best.waypoints());
}

void CheckNode(const Scenario& scenario, Node v, const char* what) {
  if (!scenario.graph().Contains(v)) {
    throw DomainError(std::string(what) + " " + std::to_string(v) +
                      " is outside 1.." + std::to_string(scenario.n()));
  }
}

// Removes waypoints that lie strictly on the way between their neighbours;
// the expanded walk is unchanged.
std::vector<Node> DropPassThrough(std::vector<Node> wp) {
  wp.erase(std::unique(wp.begin(), wp.end()), wp.end());
  std::vector<Node> out;
  for (Node v : wp) {
    if (out.size() >= 2) {
      const Node a = out[out.size() - 2], b = out.back();
      if ((a < b && b < v) || (a > b && b > v)) out.pop_back();
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::string_view PathCaseName(PathCase c) {
  switch (c) {
    case PathCase::kOuterForward:
      return "outer-forward";
    case PathCase::kOuterReversed:
      return "outer-reversed";
    case PathCase::kTrivial:
      return "trivial";
    case PathCase::kInnerOrBoundary:
      return "inner-or-boundary";
  }
  return "unknown";
}

PathCase Classify(const Scenario& scenario) {
  return ClassifyLine(scenario.start(), scenario.end(), scenario.left(),
                      scenario.right());
}

Ride SolveOuter(const Scenario& scenario) {
  RequirePath(scenario);
  const PathCase c = Classify(scenario);
  if (c != PathCase::kOuterForward && c != PathCase::kOuterReversed) {
    throw ContractError("SolveOuter needs an outer scenario, got " +
                        std::string(PathCaseName(c)));
  }
  return Ride(OuterWaypoints(FromScenario(scenario)));
}

Ride CanonicalRide(const Scenario& scenario, Node turn_before_left,
                   Node turn_after_right) {
  RequirePath(scenario);
  CheckNode(scenario, turn_before_left, "turn point M");
  CheckNode(scenario, turn_after_right, "turn point m");
  return Ride(CanonicalWaypoints(FromScenario(scenario), turn_before_left,
                                 turn_after_right));
}

CanonicalPair PhaseOneBounds(const Scenario& scenario) {
  RequirePath(scenario);
  return PhaseOne(FromScenario(scenario));
}

std::vector<TurnPoint> InnerTurnMap(const Scenario& scenario) {
  RequirePath(scenario);
  return TurnMap(FromScenario(scenario));
}

InnerCandidates ComputeInnerCandidates(const Scenario& scenario) {
  RequirePath(scenario);
  const LineInstance in = FromScenario(scenario);
  return {PhaseOne(in), TurnMap(in)};
}

Ride SolveInner(const Scenario& scenario) {
  RequirePath(scenario);
  return SolveInner(scenario, PrefixTable(scenario.graph()));
}

Ride SolveInner(const Scenario& scenario, const PrefixTable& table) {
  RequirePath(scenario);
  return Ride(InnerWaypoints(FromScenario(scenario), table));
}

PathSolution SolvePath(const Scenario& scenario) {
  RequirePath(scenario);
  return SolvePath(scenario, PrefixTable(scenario.graph()));
}

PathSolution SolvePath(const Scenario& scenario, const PrefixTable& table) {
  RequirePath(scenario);
  if (table.n() != scenario.n()) {
    throw ContractError("prefix table does not match the scenario's graph");
  }
  const LineInstance in = FromScenario(scenario);
  const PathCase path_case = ClassifyLine(in.start, in.end, in.left(), in.right());
  std::vector<Node> wp;
  switch (path_case) {
    case PathCase::kOuterForward:
    case PathCase::kOuterReversed:
      wp = OuterWaypoints(in);
      break;
    case PathCase::kTrivial:
      wp = {in.start, in.left(), in.end};
      break;
    case PathCase::kInnerOrBoundary:
      wp = InnerWaypoints(in, table);
      break;
  }
  Ride ride(DropPassThrough(std::move(wp)));
  const Feasibility check = CheckLineRide(ride.waypoints(), in.n, in.start,
                                          in.end, in.requests);
  if (!check) {
    throw InternalError("path solver produced an infeasible ride " +
                        ToString(ride) + ": " + check.Describe());
  }
  Weight cost = RideCost(ride, table);
  return {std::move(ride), std::move(cost), path_case};
}

}  // namespace rideshare
