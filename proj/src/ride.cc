#include "rideshare/ride.h"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "rideshare/errors.h"

namespace rideshare {
namespace {

constexpr std::int64_t kNever = std::numeric_limits<std::int64_t>::max();

// First time step at which each node of `targets` (sorted, unique) is
// visited by the line ride, or kNever. Time is measured in edges traversed.
std::vector<std::int64_t> FirstVisits(std::span<const Node> waypoints,
                                      const std::vector<Node>& targets) {
  std::vector<std::int64_t> first(targets.size(), kNever);
  if (targets.empty()) return first;
  Node cur = waypoints.front();
  Node lo = cur;
  Node hi = cur;
  std::int64_t time = 0;
  // targets[right] is the smallest target > hi; targets[left] the largest < lo.
  auto pos = std::lower_bound(targets.begin(), targets.end(), cur);
  std::ptrdiff_t right = pos - targets.begin();
  if (pos != targets.end() && *pos == cur) {
    first[right] = 0;
    ++right;
  }
  std::ptrdiff_t left = (pos - targets.begin()) - 1;
  const auto size = static_cast<std::ptrdiff_t>(targets.size());
  for (std::size_t i = 1; i < waypoints.size(); ++i) {
    const Node next = waypoints[i];
    if (next > hi) {
      while (right < size && targets[right] <= next) {
        first[right] = time + (targets[right] - cur);
        ++right;
      }
      hi = next;
    } else if (next < lo) {
      while (left >= 0 && targets[left] >= next) {
        first[left] = time + (cur - targets[left]);
        --left;
      }
      lo = next;
    }
    time += next > cur ? next - cur : cur - next;
    cur = next;
  }
  return first;
}

}  // namespace

Ride::Ride(std::vector<Node> waypoints) : waypoints_(std::move(waypoints)) {
  if (waypoints_.empty()) throw MalformedRideError("ride has no nodes");
  waypoints_.erase(std::unique(waypoints_.begin(), waypoints_.end()),
                   waypoints_.end());
}

std::string ToString(const Ride& ride) {
  std::ostringstream out;
  out << "<";
  for (std::size_t i = 0; i < ride.waypoints().size(); ++i) {
    if (i > 0) out << ",";
    out << ride.waypoints()[i];
  }
  out << ">";
  return out.str();
}

PrefixTable::PrefixTable(const Graph& path) {
  if (path.topology() != Topology::kPath) {
    throw ContractError("prefix table needs a path graph");
  }
  *this = PrefixTable(std::span<const Weight>(path.line_weights()));
}

PrefixTable::PrefixTable(std::span<const Weight> weights)
    : n_(static_cast<Node>(weights.size() + 1)) {
  small_.reserve(weights.size() + 1);
  small_.push_back(0);
  for (const Weight& w : weights) {
    const std::optional<std::int64_t> x = w.AsInt64();
    std::int64_t sum;
    if (!x || __builtin_add_overflow(small_.back(), *x, &sum)) break;
    small_.push_back(sum);
  }
  if (small_.size() == weights.size() + 1) return;
  small_.clear();
  small_.shrink_to_fit();
  exact_.reserve(weights.size() + 1);
  exact_.emplace_back();
  for (const Weight& w : weights) exact_.push_back(exact_.back() + w);
}

Weight RideCost(const Ride& ride, const PrefixTable& table) {
  const auto& wp = ride.waypoints();
  for (Node v : wp) {
    if (v < 1 || v > table.n()) {
      throw MalformedRideError("waypoint " + std::to_string(v) +
                               " is outside 1.." + std::to_string(table.n()));
    }
  }
  Weight total;
  for (std::size_t i = 1; i < wp.size(); ++i) {
    total += table.Distance(wp[i - 1], wp[i]);
  }
  return total;
}

Weight WalkCost(std::span<const Node> walk, const Graph& graph) {
  Weight total;
  for (std::size_t i = 1; i < walk.size(); ++i) {
    auto w = graph.EdgeWeight(walk[i - 1], walk[i]);
    if (!w) {
      throw MalformedRideError("no edge between " + std::to_string(walk[i - 1]) +
                               " and " + std::to_string(walk[i]));
    }
    total += *w;
  }
  return total;
}

std::vector<Node> ExpandOnLine(const Ride& ride) {
  const auto& wp = ride.waypoints();
  std::vector<Node> out;
  out.push_back(wp.front());
  for (std::size_t i = 1; i < wp.size(); ++i) {
    const Node step = wp[i] > wp[i - 1] ? 1 : -1;
    for (Node v = wp[i - 1] + step; v != wp[i] + step; v += step) {
      out.push_back(v);
    }
  }
  return out;
}

std::vector<Node> Expand(const Ride& ride, const Graph& graph) {
  for (Node v : ride.waypoints()) {
    if (!graph.Contains(v)) {
      throw MalformedRideError("node " + std::to_string(v) +
                               " is outside 1.." + std::to_string(graph.n()));
    }
  }
  if (graph.topology() == Topology::kPath) return ExpandOnLine(ride);
  const auto& wp = ride.waypoints();
  for (std::size_t i = 1; i < wp.size(); ++i) {
    if (!graph.EdgeWeight(wp[i - 1], wp[i])) {
      throw MalformedRideError("no edge between " + std::to_string(wp[i - 1]) +
                               " and " + std::to_string(wp[i]));
    }
  }
  return wp;
}

std::string Feasibility::Describe() const {
  switch (status) {
    case Status::kFeasible:
      return "feasible";
    case Status::kWrongStart:
      return "ride does not begin at the start node";
    case Status::kWrongEnd:
      return "ride does not finish at the end node";
    case Status::kUnsatisfied:
      return "request (" + std::to_string(violated->origin) + "," +
             std::to_string(violated->destination) + ") is not satisfied";
  }
  return "unknown";
}

Feasibility IsFeasible(std::span<const Node> walk, const Scenario& scenario) {
  const Graph& graph = scenario.graph();
  if (walk.empty()) throw MalformedRideError("ride has no nodes");
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (!graph.Contains(walk[i])) {
      throw MalformedRideError("node " + std::to_string(walk[i]) +
                               " is outside 1.." + std::to_string(graph.n()));
    }
    if (i > 0 && !graph.EdgeWeight(walk[i - 1], walk[i])) {
      throw MalformedRideError("no edge between " +
                               std::to_string(walk[i - 1]) + " and " +
                               std::to_string(walk[i]));
    }
  }
  if (walk.front() != scenario.start()) {
    return {Feasibility::Status::kWrongStart, std::nullopt};
  }
  if (walk.back() != scenario.end()) {
    return {Feasibility::Status::kWrongEnd, std::nullopt};
  }
  // A request (s,t) is satisfied iff the earliest visit of s is no later than
  // the latest visit of t.
  const auto& nodes = scenario.endpoints();
  std::vector<std::int64_t> first(nodes.size(), kNever);
  std::vector<std::int64_t> last(nodes.size(), -1);
  auto index_of = [&nodes](Node v) -> std::ptrdiff_t {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), v);
    if (it == nodes.end() || *it != v) return -1;
    return it - nodes.begin();
  };
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const auto k = index_of(walk[i]);
    if (k < 0) continue;
    const auto step = static_cast<std::int64_t>(i);
    if (first[k] == kNever) first[k] = step;
    last[k] = step;
  }
  for (const Request& r : scenario.requests()) {
    if (first[index_of(r.origin)] > last[index_of(r.destination)]) {
      return {Feasibility::Status::kUnsatisfied, r};
    }
  }
  return {};
}

Feasibility CheckLineRide(std::span<const Node> waypoints, Node n, Node start,
                          Node end, std::span<const Request> requests) {
  if (waypoints.empty()) throw MalformedRideError("ride has no nodes");
  for (Node v : waypoints) {
    if (v < 1 || v > n) {
      throw MalformedRideError("waypoint " + std::to_string(v) +
                               " is outside 1.." + std::to_string(n));
    }
  }
  if (waypoints.front() != start) {
    return {Feasibility::Status::kWrongStart, std::nullopt};
  }
  if (waypoints.back() != end) {
    return {Feasibility::Status::kWrongEnd, std::nullopt};
  }
  std::vector<Request> sorted(requests.begin(), requests.end());
  if (!std::is_sorted(sorted.begin(), sorted.end())) {
    std::sort(sorted.begin(), sorted.end());
  }
  const std::vector<Node> targets = CollectNodes(sorted);

  const std::vector<std::int64_t> first = FirstVisits(waypoints, targets);
  std::vector<Node> reversed(waypoints.rbegin(), waypoints.rend());
  const std::vector<std::int64_t> first_from_end =
      FirstVisits(reversed, targets);
  std::int64_t total = 0;
  for (std::size_t i = 1; i < waypoints.size(); ++i) {
    total += std::abs(static_cast<std::int64_t>(waypoints[i]) - waypoints[i - 1]);
  }
  auto index_of = [&targets](Node v) {
    return std::lower_bound(targets.begin(), targets.end(), v) -
           targets.begin();
  };
  for (const Request& r : sorted) {
    const std::int64_t origin_first = first[index_of(r.origin)];
    const std::int64_t back = first_from_end[index_of(r.destination)];
    if (origin_first == kNever || back == kNever ||
        origin_first > total - back) {
      return {Feasibility::Status::kUnsatisfied, r};
    }
  }
  return {};
}

Scenario Symmetrize(const Scenario& scenario) {
  const Graph& g = scenario.graph();
  if (g.topology() != Topology::kPath) {
    throw ContractError("symmetrize needs a path scenario");
  }
  std::vector<Weight> reversed(g.line_weights().rbegin(),
                               g.line_weights().rend());
  auto graph = std::make_shared<const Graph>(Graph::Path(std::move(reversed)));
  const Node n = g.n();
  return Scenario(std::move(graph), Mirror(scenario.start(), n),
                  Mirror(scenario.end(), n),
                  Symmetrize(scenario.requests(), n));
}

Ride Symmetrize(const Ride& ride, Node n) {
  std::vector<Node> out;
  out.reserve(ride.waypoints().size());
  for (Node v : ride.waypoints()) out.push_back(Mirror(v, n));
  return Ride(std::move(out));
}

std::vector<Request> Symmetrize(std::span<const Request> requests, Node n) {
  std::vector<Request> out;
  out.reserve(requests.size());
  for (const Request& r : requests) {
    out.push_back({Mirror(r.origin, n), Mirror(r.destination, n)});
  }
  return out;
}

}  // namespace rideshare
