#include "rideshare/oracle.h"

#include <algorithm>
#include <queue>
#include <string>
#include <unordered_map>
#include <vector>

#include "rideshare/errors.h"

namespace rideshare {
namespace {

using State = std::uint64_t;

class StateSpace {
 public:
  explicit StateSpace(const Scenario& scenario)
      : requests_(scenario.requests()),
        origins_at_(scenario.n() + 1),
        destinations_at_(scenario.n() + 1) {
    pow3_.push_back(1);
    for (std::size_t i = 0; i < requests_.size(); ++i) {
      pow3_.push_back(pow3_.back() * 3);
      origins_at_[requests_[i].origin].push_back(i);
      destinations_at_[requests_[i].destination].push_back(i);
    }
    done_ = pow3_.back() - 1;  // every digit 2
  }

  State Encode(Node v, State status) const {
    return static_cast<State>(v - 1) * pow3_.back() + status;
  }
  Node NodeOf(State s) const { return static_cast<Node>(s / pow3_.back()) + 1; }
  State StatusOf(State s) const { return s % pow3_.back(); }
  bool IsGoal(State status) const { return status == done_; }

  State Arrive(Node v, State status) const {
    for (std::size_t i : origins_at_[v]) {
      if (Digit(status, i) == 0) status += pow3_[i];
    }
    for (std::size_t i : destinations_at_[v]) {
      if (Digit(status, i) == 1) status += pow3_[i];
    }
    return status;
  }

 private:
  State Digit(State status, std::size_t i) const {
    return status / pow3_[i] % 3;
  }

  std::vector<Request> requests_;
  std::vector<std::vector<std::size_t>> origins_at_;
  std::vector<std::vector<std::size_t>> destinations_at_;
  std::vector<State> pow3_;
  State done_ = 0;
};

void CheckBudget(const Scenario& scenario, std::int64_t budget) {
  if (budget < 0) return;
  const std::size_t k = scenario.requests().size();
  // n * 3^k, saturating at budget + 1.
  std::int64_t states = scenario.n();
  for (std::size_t i = 0; i < k && states <= budget; ++i) states *= 3;
  if (states > budget || k > 38) {
    throw OracleTooLargeError(
        "oracle state space n*3^|C| with n=" + std::to_string(scenario.n()) +
        ", |C|=" + std::to_string(k) + " exceeds the budget of " +
        std::to_string(budget) + " states");
  }
}

struct Entry {
  Weight cost;
  std::uint64_t seq;
  State state;
};

struct EntryAfter {
  bool operator()(const Entry& a, const Entry& b) const {
    if (a.cost != b.cost) return b.cost < a.cost;
    return a.seq > b.seq;
  }
};

}  // namespace

OracleResult BruteForceOptimal(const Scenario& scenario, std::int64_t budget) {
  CheckBudget(scenario, budget);
  const StateSpace space(scenario);
  const Graph& graph = scenario.graph();

  struct Label {
    Weight cost;
    State parent;
    bool settled = false;
  };
  std::unordered_map<State, Label> labels;
  std::priority_queue<Entry, std::vector<Entry>, EntryAfter> queue;
  std::uint64_t seq = 0;

  const State source =
      space.Encode(scenario.start(), space.Arrive(scenario.start(), 0));
  labels[source] = {Weight(), source};
  queue.push({Weight(), seq++, source});

  OracleResult result;
  while (!queue.empty()) {
    Entry top = queue.top();
    queue.pop();
    Label& label = labels[top.state];
    if (label.settled || top.cost != label.cost) continue;
    label.settled = true;
    ++result.states_settled;

    const Node at = space.NodeOf(top.state);
    const State status = space.StatusOf(top.state);
    if (at == scenario.end() && space.IsGoal(status)) {
      std::vector<Node> walk;
      for (State s = top.state;; s = labels[s].parent) {
        walk.push_back(space.NodeOf(s));
        if (s == source) break;
      }
      std::reverse(walk.begin(), walk.end());
      result.feasible = true;
      result.cost = top.cost;
      result.ride = Ride(std::move(walk));
      return result;
    }

    graph.ForEachNeighbor(at, [&](Node next, const Weight& w) {
      const State succ = space.Encode(next, space.Arrive(next, status));
      Weight cost = top.cost + w;
      auto [it, inserted] = labels.try_emplace(succ);
      if (inserted || (!it->second.settled && cost < it->second.cost)) {
        it->second.cost = cost;
        it->second.parent = top.state;
        queue.push({std::move(cost), seq++, succ});
      }
    });
  }
  return result;
}

}  // namespace rideshare
