#ifndef RIDESHARE_RIDE_H_
#define RIDESHARE_RIDE_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rideshare/graph.h"
#include "rideshare/weight.h"

namespace rideshare {

// A vehicle trajectory in succinct form.
//
// On a path the ride is the walk that moves straight between consecutive
// waypoints, so only turning points need to be listed. Rides on cycles and
// general graphs are stored fully expanded: consecutive waypoints must then be
// adjacent. Repeated consecutive waypoints are collapsed on construction.
class Ride {
 public:
  // Throws MalformedRideError if `waypoints` is empty.
  explicit Ride(std::vector<Node> waypoints);

  const std::vector<Node>& waypoints() const { return waypoints_; }
  Node first() const { return waypoints_.front(); }
  Node last() const { return waypoints_.back(); }

  friend bool operator==(const Ride&, const Ride&) = default;

 private:
  std::vector<Node> waypoints_;
};

std::string ToString(const Ride& ride);

// Cumulative edge cost along a path: cw(1) = 0 and
// cw(v) = w({1,2}) + ... + w({v-1,v}). The cost of moving between x and y is
// |cw(y) - cw(x)|.
class PrefixTable {
 public:
  // `path` must be a path graph.
  explicit PrefixTable(const Graph& path);
  // weights[i] is the cost of edge {i+1, i+2}.
  explicit PrefixTable(std::span<const Weight> weights);

  Node n() const { return n_; }
  Weight cw(Node v) const {
    return exact_.empty() ? Weight(small_[v - 1]) : exact_[v - 1];
  }
  Weight Distance(Node x, Node y) const {
    if (exact_.empty()) {
      const std::int64_t a = small_[x - 1], b = small_[y - 1];
      return Weight(a < b ? b - a : a - b);
    }
    return rideshare::Distance(exact_[x - 1], exact_[y - 1]);
  }

 private:
  Node n_ = 0;
  // Integer prefix sums that fit in int64 are kept in `small_`; anything
  // else goes to `exact_`.
  std::vector<std::int64_t> small_;
  std::vector<Weight> exact_;
};

// Cost of a line ride from its waypoints. Throws MalformedRideError when a
// waypoint is outside 1..n.
Weight RideCost(const Ride& ride, const PrefixTable& table);

// Edge-weight sum of an expanded walk. Throws MalformedRideError on a step
// between non-adjacent nodes.
Weight WalkCost(std::span<const Node> walk, const Graph& graph);

// Straight-line expansion between consecutive waypoints.
std::vector<Node> ExpandOnLine(const Ride& ride);

// The full node sequence of `ride` on `graph`, checking that it is a walk.
std::vector<Node> Expand(const Ride& ride, const Graph& graph);

struct Feasibility {
  enum class Status { kFeasible, kWrongStart, kWrongEnd, kUnsatisfied };

  Status status = Status::kFeasible;
  // Set for kUnsatisfied: the smallest violated request.
  std::optional<Request> violated;

  bool ok() const { return status == Status::kFeasible; }
  explicit operator bool() const { return ok(); }
  std::string Describe() const;
};

// Feasibility of an expanded walk: starts at start, ends at end, and for each
// request the origin is visited no later than some visit of the destination.
// Throws MalformedRideError if the sequence is empty, leaves 1..n, or steps
// between non-adjacent nodes.
Feasibility IsFeasible(std::span<const Node> walk, const Scenario& scenario);

// Same check for a line ride given by waypoints, without expanding it. Runs
// in O(|waypoints| + |requests| log |requests|) regardless of n.
Feasibility CheckLineRide(std::span<const Node> waypoints, Node n, Node start,
                          Node end, std::span<const Request> requests);

inline Node Mirror(Node v, Node n) { return n - v + 1; }

// Relabels every node v as n - v + 1 (path scenarios only).
Scenario Symmetrize(const Scenario& scenario);
Ride Symmetrize(const Ride& ride, Node n);
std::vector<Request> Symmetrize(std::span<const Request> requests, Node n);

}  // namespace rideshare

#endif  // RIDESHARE_RIDE_H_
