#include "rideshare/generator.h"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rideshare/errors.h"

namespace rideshare {

std::int64_t Rng::Uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi) -
                              static_cast<std::uint64_t>(lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(engine_());  // full range
  // Largest multiple of `range` that fits; draws above it are rejected.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % range);
}

namespace {

void Validate(const GeneratorOptions& o) {
  auto fail = [](const std::string& why) {
    throw DomainError("generator: " + why);
  };
  if (o.n < 1) fail("n must be positive");
  if (o.topology == Topology::kCycle && o.n < 3) fail("a cycle needs n >= 3");
  if (o.requests < 1) fail("at least one request is needed");
  if (o.min_weight < 0 || o.min_weight > o.max_weight) {
    fail("weights need 0 <= min_weight <= max_weight");
  }
  if (o.endpoints < 0 || o.endpoints > o.n) fail("endpoints must be in 0..n");
  if (o.endpoints > 0 && 2 * static_cast<std::int64_t>(o.requests) < o.endpoints) {
    fail("too few requests to use every endpoint");
  }
}

std::vector<Node> DistinctNodes(Rng& rng, Node n, Node count) {
  std::unordered_set<Node> seen;
  std::vector<Node> out;
  while (static_cast<Node>(out.size()) < count) {
    const Node v = static_cast<Node>(rng.Uniform(1, n));
    if (seen.insert(v).second) out.push_back(v);
  }
  return out;
}

}  // namespace

Scenario Generate(const GeneratorOptions& o) {
  Validate(o);
  Rng rng(o.seed);
  auto weight = [&] { return Weight(rng.Uniform(o.min_weight, o.max_weight)); };

  std::shared_ptr<const Graph> graph;
  switch (o.topology) {
    case Topology::kPath:
    case Topology::kCycle: {
      std::vector<Weight> weights(o.topology == Topology::kPath ? o.n - 1 : o.n);
      for (Weight& w : weights) w = weight();
      graph = std::make_shared<const Graph>(
          o.topology == Topology::kPath ? Graph::Path(std::move(weights))
                                        : Graph::Cycle(std::move(weights)));
      break;
    }
    case Topology::kGeneral: {
      std::vector<Edge> edges;
      for (Node v = 2; v <= o.n; ++v) {
        edges.push_back({static_cast<Node>(rng.Uniform(1, v - 1)), v, weight()});
      }
      const int extra = o.extra_edges < 0 ? o.n : o.extra_edges;
      for (int i = 0; i < extra && o.n > 1; ++i) {
        const Node u = static_cast<Node>(rng.Uniform(1, o.n));
        const Node v = static_cast<Node>(rng.Uniform(1, o.n));
        if (u != v) edges.push_back({u, v, weight()});
      }
      graph = std::make_shared<const Graph>(Graph::General(o.n, std::move(edges)));
      break;
    }
  }

  const Node start = static_cast<Node>(rng.Uniform(1, o.n));
  const Node end = static_cast<Node>(rng.Uniform(1, o.n));
  std::vector<Request> requests;
  requests.reserve(o.requests);
  if (o.endpoints == 0) {
    for (int i = 0; i < o.requests; ++i) {
      requests.push_back({static_cast<Node>(rng.Uniform(1, o.n)),
                          static_cast<Node>(rng.Uniform(1, o.n))});
    }
  } else {
    const std::vector<Node> pool = DistinctNodes(rng, o.n, o.endpoints);
    // Cover the pool first, pairing neighbours in draw order.
    for (std::size_t i = 0; i < pool.size(); i += 2) {
      const Node s = pool[i];
      const Node t = i + 1 < pool.size() ? pool[i + 1] : pool[rng.Uniform(0, i)];
      requests.push_back({s, t});
    }
    while (static_cast<int>(requests.size()) < o.requests) {
      requests.push_back({pool[rng.Uniform(0, pool.size() - 1)],
                          pool[rng.Uniform(0, pool.size() - 1)]});
    }
  }
  return Scenario(std::move(graph), start, end, std::move(requests));
}

}  // namespace rideshare
