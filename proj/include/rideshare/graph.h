#ifndef RIDESHARE_GRAPH_H_
#define RIDESHARE_GRAPH_H_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "rideshare/weight.h"

namespace rideshare {

// Nodes are 1-based: a graph with n nodes uses labels 1..n.
using Node = std::int32_t;

// 1-based modulus: maps any integer onto 1..n, so Wrap(n, n) == n and
// Wrap(n + 1, n) == 1.
constexpr Node Wrap(std::int64_t v, std::int64_t n) {
  std::int64_t r = (v - 1) % n;
  if (r < 0) r += n;
  return static_cast<Node>(r + 1);
}

enum class Topology { kPath, kCycle, kGeneral };

std::string_view TopologyName(Topology topology);

struct Edge {
  Node u = 0;
  Node v = 0;
  Weight weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected graph with nonnegative exact edge costs. Immutable once built.
class Graph {
 public:
  // n = weights.size() + 1; weights[i] is the cost of edge {i+1, i+2}.
  static Graph Path(std::vector<Weight> weights);
  // n = weights.size() >= 3; weights[i] is the cost of edge {i+1, Wrap(i+2)},
  // so the last entry is edge {n, 1}.
  static Graph Cycle(std::vector<Weight> weights);
  // Self-loops are rejected. Parallel edges collapse to the cheapest one.
  static Graph General(Node n, std::vector<Edge> edges);

  Topology topology() const { return topology_; }
  Node n() const { return n_; }
  bool IsLine() const { return topology_ != Topology::kGeneral; }

  // Path and cycle only: the edge costs in order, see Path() / Cycle().
  const std::vector<Weight>& line_weights() const { return line_weights_; }
  // General only: the deduplicated edge list.
  const std::vector<Edge>& edges() const { return edges_; }

  bool Contains(std::int64_t v) const { return v >= 1 && v <= n_; }
  std::optional<Weight> EdgeWeight(Node u, Node v) const;

  template <typename Fn>
  void ForEachNeighbor(Node v, Fn&& fn) const {
    switch (topology_) {
      case Topology::kPath:
        if (v > 1) fn(v - 1, line_weights_[v - 2]);
        if (v < n_) fn(v + 1, line_weights_[v - 1]);
        break;
      case Topology::kCycle:
        fn(Wrap(v - 1, n_), line_weights_[Wrap(v - 1, n_) - 1]);
        fn(Wrap(v + 1, n_), line_weights_[v - 1]);
        break;
      case Topology::kGeneral:
        for (const auto& [u, w] : adjacency_[v - 1]) fn(u, w);
        break;
    }
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.topology_ == b.topology_ && a.n_ == b.n_ &&
           a.line_weights_ == b.line_weights_ && a.edges_ == b.edges_;
  }

 private:
  Graph() = default;

  Topology topology_ = Topology::kPath;
  Node n_ = 1;
  std::vector<Weight> line_weights_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<Node, Weight>>> adjacency_;
};

struct Request {
  Node origin = 0;
  Node destination = 0;

  bool IsBackward() const { return destination < origin; }

  friend auto operator<=>(const Request&, const Request&) = default;
};

// A ride-sharing instance: the vehicle goes from `start` to `end` and must
// carry every request from origin to destination. Requests are deduplicated
// and kept sorted.
class Scenario {
 public:
  // Throws DomainError if a node is outside 1..n and ContractError if
  // `requests` is empty.
  Scenario(std::shared_ptr<const Graph> graph, Node start, Node end,
           std::vector<Request> requests);

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
  Node n() const { return graph_->n(); }
  Node start() const { return start_; }
  Node end() const { return end_; }
  const std::vector<Request>& requests() const { return requests_; }

  // V_C: every request endpoint, sorted and unique.
  const std::vector<Node>& endpoints() const { return endpoints_; }
  Node left() const { return endpoints_.front(); }
  Node right() const { return endpoints_.back(); }

  // V_C together with start and end, sorted and unique.
  std::vector<Node> Landmarks() const;

  friend bool operator==(const Scenario& a, const Scenario& b) {
    return *a.graph_ == *b.graph_ && a.start_ == b.start_ &&
           a.end_ == b.end_ && a.requests_ == b.requests_;
  }

 private:
  std::shared_ptr<const Graph> graph_;
  Node start_;
  Node end_;
  std::vector<Request> requests_;
  std::vector<Node> endpoints_;
};

// Sorts and removes duplicates in place.
void CanonicalizeRequests(std::vector<Request>& requests);

// Sorted unique union of request endpoints and `extra`.
std::vector<Node> CollectNodes(const std::vector<Request>& requests,
                               std::initializer_list<Node> extra = {});

}  // namespace rideshare

#endif  // RIDESHARE_GRAPH_H_
