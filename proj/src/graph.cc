#include "rideshare/graph.h"

#include <algorithm>
#include <map>
#include <string>

#include "rideshare/errors.h"

namespace rideshare {

std::string_view TopologyName(Topology topology) {
  switch (topology) {
    case Topology::kPath:
      return "path";
    case Topology::kCycle:
      return "cycle";
    case Topology::kGeneral:
      return "general";
  }
  return "unknown";
}

Graph Graph::Path(std::vector<Weight> weights) {
  Graph g;
  g.topology_ = Topology::kPath;
  g.n_ = static_cast<Node>(weights.size() + 1);
  g.line_weights_ = std::move(weights);
  return g;
}

Graph Graph::Cycle(std::vector<Weight> weights) {
  if (weights.size() < 3) {
    throw DomainError("a cycle needs at least 3 nodes, got " +
                      std::to_string(weights.size()));
  }
  Graph g;
  g.topology_ = Topology::kCycle;
  g.n_ = static_cast<Node>(weights.size());
  g.line_weights_ = std::move(weights);
  return g;
}

Graph Graph::General(Node n, std::vector<Edge> edges) {
  if (n < 1) throw DomainError("graph needs at least one node");
  std::map<std::pair<Node, Node>, Weight> cheapest;
  for (const Edge& e : edges) {
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
      throw DomainError("edge {" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + "} has a node outside 1.." +
                        std::to_string(n));
    }
    if (e.u == e.v) {
      throw DomainError("self-loop at node " + std::to_string(e.u));
    }
    const auto key = std::minmax(e.u, e.v);
    auto [it, inserted] = cheapest.emplace(key, e.weight);
    if (!inserted && e.weight < it->second) it->second = e.weight;
  }
  Graph g;
  g.topology_ = Topology::kGeneral;
  g.n_ = n;
  g.adjacency_.resize(n);
  for (const auto& [key, w] : cheapest) {
    g.edges_.push_back(Edge{key.first, key.second, w});
    g.adjacency_[key.first - 1].emplace_back(key.second, w);
    g.adjacency_[key.second - 1].emplace_back(key.first, w);
  }
  return g;
}

std::optional<Weight> Graph::EdgeWeight(Node u, Node v) const {
  if (!Contains(u) || !Contains(v) || u == v) return std::nullopt;
  switch (topology_) {
    case Topology::kPath:
      if (u + 1 == v) return line_weights_[u - 1];
      if (v + 1 == u) return line_weights_[v - 1];
      return std::nullopt;
    case Topology::kCycle:
      if (Wrap(u + 1, n_) == v) return line_weights_[u - 1];
      if (Wrap(v + 1, n_) == u) return line_weights_[v - 1];
      return std::nullopt;
    case Topology::kGeneral:
      for (const auto& [x, w] : adjacency_[u - 1]) {
        if (x == v) return w;
      }
      return std::nullopt;
  }
  return std::nullopt;
}

void CanonicalizeRequests(std::vector<Request>& requests) {
  std::sort(requests.begin(), requests.end());
  requests.erase(std::unique(requests.begin(), requests.end()),
                 requests.end());
}

std::vector<Node> CollectNodes(const std::vector<Request>& requests,
                               std::initializer_list<Node> extra) {
  std::vector<Node> nodes;
  nodes.reserve(2 * requests.size() + extra.size());
  for (const Request& r : requests) {
    nodes.push_back(r.origin);
    nodes.push_back(r.destination);
  }
  nodes.insert(nodes.end(), extra.begin(), extra.end());
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

Scenario::Scenario(std::shared_ptr<const Graph> graph, Node start, Node end,
                   std::vector<Request> requests)
    : graph_(std::move(graph)),
      start_(start),
      end_(end),
      requests_(std::move(requests)) {
  if (!graph_) throw ContractError("scenario needs a graph");
  if (requests_.empty()) {
    throw ContractError("scenario needs at least one request");
  }
  const Node n = graph_->n();
  auto check = [n](Node v, const char* what) {
    if (v < 1 || v > n) {
      throw DomainError(std::string(what) + " node " + std::to_string(v) +
                        " is outside 1.." + std::to_string(n));
    }
  };
  check(start_, "start");
  check(end_, "end");
  for (const Request& r : requests_) {
    check(r.origin, "request origin");
    check(r.destination, "request destination");
  }
  CanonicalizeRequests(requests_);
  endpoints_ = CollectNodes(requests_);
}

std::vector<Node> Scenario::Landmarks() const {
  std::vector<Node> nodes = endpoints_;
  nodes.push_back(start_);
  nodes.push_back(end_);
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

}  // namespace rideshare
