#include "rideshare/cycle_solver.h"

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "rideshare/errors.h"
#include "rideshare/path_solver.h"

namespace rideshare {
namespace {

void RequireCycle(const Scenario& scenario) {
  if (scenario.graph().topology() != Topology::kCycle) {
    throw ContractError("cycle solver needs a cycle graph, got " +
                        std::string(TopologyName(scenario.graph().topology())));
  }
}

// (x - base) mod n, in 0..n-1.
std::int64_t Offset(std::int64_t x, std::int64_t base, std::int64_t n) {
  std::int64_t r = (x - base) % n;
  return r < 0 ? r + n : r;
}

// What every tuple of one scenario shares: the unrolled path, its prefix
// sums, and the landmark set K = V_C u {start, end}.
class Unroller {
 public:
  Unroller(const Scenario& cycle, std::shared_ptr<const Graph> path)
      : cycle_(cycle),
        n_(cycle.n()),
        path_(std::move(path)),
        table_(*path_),
        landmarks_(cycle.Landmarks()) {
    is_landmark_.assign(n_ + 1, false);
    for (Node x : landmarks_) is_landmark_[x] = true;
  }

  const PrefixTable& table() const { return table_; }
  const std::shared_ptr<const Graph>& path() const { return path_; }

  // Smallest beta - alpha for which [alpha, beta] holds every landmark.
  std::int64_t Span(std::int64_t alpha) const {
    std::int64_t span = 0;
    for (Node x : landmarks_) span = std::max(span, Offset(x, alpha, n_));
    return span;
  }

  bool IsLandmark(std::int64_t v) const { return is_landmark_[Wrap(v, n_)]; }

  void Check(const Tuple& t) const {
    auto reject = [&](const std::string& why) {
      throw TupleRejectedError("tuple (" + std::to_string(t.alpha) + "," +
                               std::to_string(t.beta) + "," +
                               std::to_string(t.v_start) + "," +
                               std::to_string(t.v_end) + ") rejected: " + why);
    };
    if (t.alpha < 1 || t.alpha > n_) reject("alpha outside 1..n");
    if (t.beta < t.alpha || t.beta > 3 * std::int64_t{n_}) {
      reject("beta outside alpha..3n");
    }
    if (!IsLandmark(t.alpha) || !IsLandmark(t.beta)) {
      reject("window ends are not request endpoints, start or end");
    }
    if (t.alpha + Span(t.alpha) > t.beta) {
      reject("window misses a request endpoint, start or end");
    }
    auto covers = [&](Node v, Node target) {
      return v >= t.alpha && v <= t.beta && Wrap(v, n_) == target;
    };
    if (!covers(t.v_start, cycle_.start())) reject("bad start representative");
    if (!covers(t.v_end, cycle_.end())) reject("bad end representative");
  }

  // Lifted requests for the window; `out` is cleared first.
  void Lift(const Tuple& t, std::vector<Request>& out) const {
    out.clear();
    const WindowRange window = WindowNodes(t.alpha, t.beta, n_);
    if (window.empty()) return;
    auto representative = [&](Node x) -> std::optional<Node> {
      const std::int64_t v = window.first + Offset(x, window.first, n_);
      if (v > window.last) return std::nullopt;
      return static_cast<Node>(v);
    };
    for (const Request& r : cycle_.requests()) {
      const auto s = representative(r.origin);
      const auto d = representative(r.destination);
      if (s && d) out.push_back({*s, *d});
    }
  }

  static Request DirectionRequest(const Tuple& t) {
    return t.direction == Direction::kForward ? Request{t.alpha, t.beta}
                                              : Request{t.beta, t.alpha};
  }

  // No ride for the tuple can be cheaper than this.
  Weight LowerBound(const Tuple& t) const {
    const Request dir = DirectionRequest(t);
    return table_.Distance(t.v_start, dir.origin) +
           table_.Distance(dir.origin, dir.destination) +
           table_.Distance(dir.destination, t.v_end);
  }

  // The longest lifted request in each direction, by cost.
  struct LongestLifted {
    std::optional<Request> forward;   // s < t
    std::optional<Request> backward;  // s > t
  };
  LongestLifted Longest(std::span<const Request> lifted) const {
    LongestLifted out;
    Weight forward_length, backward_length;
    for (const Request& r : lifted) {
      if (r.origin == r.destination) continue;
      Weight length = table_.Distance(r.origin, r.destination);
      auto& slot = r.origin < r.destination ? out.forward : out.backward;
      Weight& slot_length = r.origin < r.destination ? forward_length : backward_length;
      if (!slot || slot_length < length) {
        slot = r;
        slot_length = std::move(length);
      }
    }
    return out;
  }

  // Tighter bound: the ride also has to serve the longest lifted request
  // running against the direction request, so it visits four points in one
  // of the six orders that keep both origins first.
  Weight RequestBound(const Tuple& t, const LongestLifted& longest) const {
    const Request dir = DirectionRequest(t);
    const std::optional<Request>& against =
        dir.origin < dir.destination ? longest.backward : longest.forward;
    if (!against) return LowerBound(t);
    const Node a = dir.origin, b = dir.destination;
    const Node x = against->origin, y = against->destination;
    const Node orders[6][4] = {{a, b, x, y}, {a, x, b, y}, {a, x, y, b},
                               {x, a, b, y}, {x, a, y, b}, {x, y, a, b}};
    std::optional<Weight> best;
    for (const auto& order : orders) {
      Weight cost = table_.Distance(t.v_start, order[0]);
      for (int i = 1; i < 4; ++i) cost += table_.Distance(order[i - 1], order[i]);
      cost += table_.Distance(order[3], t.v_end);
      if (!best || cost < *best) best = std::move(cost);
    }
    return *best;
  }

  std::vector<Tuple> Enumerate() const {
    std::vector<Node> lifted_landmarks;
    for (int copy = 0; copy < 3; ++copy) {
      for (Node x : landmarks_) lifted_landmarks.push_back(x + copy * n_);
    }
    std::sort(lifted_landmarks.begin(), lifted_landmarks.end());

    auto copies = [&](Node x, Node lo, Node hi) {
      std::vector<Node> out;
      for (int copy = 0; copy < 3; ++copy) {
        const Node v = x + copy * n_;
        if (v >= lo && v <= hi) out.push_back(v);
      }
      return out;
    };

    std::vector<Tuple> tuples;
    for (Node alpha : landmarks_) {
      const std::int64_t min_beta = alpha + Span(alpha);
      for (Node beta : lifted_landmarks) {
        if (beta < min_beta) continue;
        for (Node vs : copies(cycle_.start(), alpha, beta)) {
          for (Node vt : copies(cycle_.end(), alpha, beta)) {
            tuples.push_back({alpha, beta, vs, vt, Direction::kForward});
            tuples.push_back({alpha, beta, vs, vt, Direction::kBackward});
          }
        }
      }
    }
    const std::int64_t k = static_cast<std::int64_t>(landmarks_.size());
    if (static_cast<std::int64_t>(tuples.size()) > 9 * (3 * k) * (3 * k)) {
      throw InternalError("tuple enumeration exceeded its bound");
    }
    return tuples;
  }

 private:
  const Scenario& cycle_;
  Node n_;
  std::shared_ptr<const Graph> path_;
  PrefixTable table_;
  std::vector<Node> landmarks_;
  std::vector<bool> is_landmark_;
};

// Relabels the cycle so that `start` becomes node 1.
struct Rotation {
  Node n;
  Node shift;  // old label of new node 1, minus one

  Node ToNew(Node old_label) const { return Wrap(old_label - shift, n); }
  Node ToOld(Node new_label) const { return Wrap(new_label + shift, n); }
};

Scenario Rotate(const Scenario& scenario, const Rotation& rot) {
  const std::vector<Weight>& old_weights = scenario.graph().line_weights();
  std::vector<Weight> weights(old_weights.size());
  for (Node u = 1; u <= rot.n; ++u) weights[u - 1] = old_weights[rot.ToOld(u) - 1];
  std::vector<Request> requests;
  requests.reserve(scenario.requests().size());
  for (const Request& r : scenario.requests()) {
    requests.push_back({rot.ToNew(r.origin), rot.ToNew(r.destination)});
  }
  return Scenario(std::make_shared<const Graph>(Graph::Cycle(std::move(weights))),
                  rot.ToNew(scenario.start()), rot.ToNew(scenario.end()),
                  std::move(requests));
}

// Unrolled waypoints -> expanded walk on the cycle (in the same labels).
std::vector<Node> Project(const Ride& unrolled, Node n) {
  std::vector<Node> walk = ExpandOnLine(unrolled);
  for (Node& v : walk) v = Wrap(v, n);
  return walk;
}

}  // namespace

std::shared_ptr<const Graph> UnrolledPath(const Graph& cycle) {
  if (cycle.topology() != Topology::kCycle) {
    throw ContractError("UnrolledPath needs a cycle graph");
  }
  const Node n = cycle.n();
  const std::vector<Weight>& w = cycle.line_weights();
  std::vector<Weight> weights;
  weights.reserve(3 * static_cast<std::size_t>(n) - 1);
  for (std::int64_t v = 1; v < 3 * std::int64_t{n}; ++v) {
    weights.push_back(w[Wrap(v, n) - 1]);
  }
  return std::make_shared<const Graph>(Graph::Path(std::move(weights)));
}

std::vector<Node> WindowRange::Nodes() const {
  std::vector<Node> out;
  for (std::int64_t v = first; v <= last; ++v) out.push_back(static_cast<Node>(v));
  return out;
}

WindowRange WindowNodes(std::int64_t alpha, std::int64_t beta, Node n) {
  if (beta < alpha + n) return {alpha, beta};
  if (beta < alpha + 2 * std::int64_t{n} - 1) return {beta - n + 1, alpha + n - 1};
  return {};
}

Scenario UnrolledScenario::ToScenario() const {
  std::vector<Request> requests = lifted;
  requests.push_back(direction_request);
  return Scenario(path, tuple.v_start, tuple.v_end, std::move(requests));
}

UnrolledScenario Unroll(const Scenario& cycle, const Tuple& tuple) {
  RequireCycle(cycle);
  return Unroll(cycle, tuple, UnrolledPath(cycle.graph()));
}

UnrolledScenario Unroll(const Scenario& cycle, const Tuple& tuple,
                        std::shared_ptr<const Graph> path) {
  RequireCycle(cycle);
  if (path->n() != 3 * cycle.n()) {
    throw ContractError("unrolled path has the wrong length");
  }
  const Unroller unroller(cycle, path);
  unroller.Check(tuple);
  UnrolledScenario out;
  out.path = std::move(path);
  out.tuple = tuple;
  out.direction_request = Unroller::DirectionRequest(tuple);
  unroller.Lift(tuple, out.lifted);
  return out;
}

std::vector<Tuple> EnumerateTuples(const Scenario& cycle) {
  RequireCycle(cycle);
  return Unroller(cycle, UnrolledPath(cycle.graph())).Enumerate();
}

CycleSolution SolveCycle(const Scenario& original, const CycleOptions& options) {
  RequireCycle(original);
  const Node n = original.n();
  const Rotation rot{n, static_cast<Node>(original.start() - 1)};
  const Scenario cycle = Rotate(original, rot);
  const Unroller unroller(cycle, UnrolledPath(cycle.graph()));

  CycleStats stats;
  const std::vector<Tuple> tuples = unroller.Enumerate();
  stats.tuples = static_cast<std::int64_t>(tuples.size());

  std::optional<PathSolution> best;
  std::vector<Request> requests;
  auto solve = [&](const Tuple& tuple, std::vector<Request> lifted) {
    lifted.push_back(Unroller::DirectionRequest(tuple));
    const Scenario unrolled(unroller.path(), tuple.v_start, tuple.v_end,
                            std::move(lifted));
    PathSolution solution = SolvePath(unrolled, unroller.table());
    ++stats.solved;
    if (options.check_every_tuple) {
      const Feasibility f = IsFeasible(Project(solution.ride, n), cycle);
      if (!f) {
        throw InternalError("projected ride for a tuple is infeasible: " +
                            f.Describe());
      }
    }
    if (!best || solution.cost < best->cost) best = std::move(solution);
  };

  if (!options.prune) {
    for (const Tuple& tuple : tuples) {
      unroller.Lift(tuple, requests);
      solve(tuple, std::move(requests));
    }
  } else if (!tuples.empty()) {
    // Seed with the tuple of smallest window bound, keep only tuples whose
    // window bound beats it, and try those in order of the tighter bound.
    std::vector<Weight> window_bound;
    window_bound.reserve(tuples.size());
    std::size_t seed = 0;
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      window_bound.push_back(unroller.LowerBound(tuples[i]));
      if (window_bound[i] < window_bound[seed]) seed = i;
    }
    unroller.Lift(tuples[seed], requests);
    solve(tuples[seed], std::move(requests));

    // Tuples of one window are adjacent in enumeration order.
    std::vector<std::pair<Weight, std::size_t>> open;
    std::optional<std::pair<Node, Node>> window;
    Unroller::LongestLifted longest;
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      if (i == seed || !(window_bound[i] < best->cost)) continue;
      const std::pair<Node, Node> key{tuples[i].alpha, tuples[i].beta};
      if (window != key) {
        window = key;
        unroller.Lift(tuples[i], requests);
        longest = unroller.Longest(requests);
      }
      Weight bound = unroller.RequestBound(tuples[i], longest);
      if (bound < best->cost) open.emplace_back(std::move(bound), i);
    }
    std::stable_sort(open.begin(), open.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [bound, i] : open) {
      if (!(bound < best->cost)) break;
      unroller.Lift(tuples[i], requests);
      solve(tuples[i], std::move(requests));
    }
  }
  if (!best) throw InternalError("no tuple produced a ride");

  const std::vector<Node> walk = Project(best->ride, n);
  const Feasibility f = IsFeasible(walk, cycle);
  if (!f) {
    throw InternalError("cycle solver produced an infeasible ride: " +
                        f.Describe());
  }
  if (WalkCost(walk, cycle.graph()) != best->cost) {
    throw InternalError("projected ride cost differs from the unrolled cost");
  }
  std::vector<Node> original_walk = walk;
  for (Node& v : original_walk) v = rot.ToOld(v);
  return {Ride(std::move(original_walk)), std::move(best->cost), stats};
}

}  // namespace rideshare
