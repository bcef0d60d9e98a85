#include "rideshare/normalize.h"

#include <algorithm>
#include <functional>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>

#include "rideshare/errors.h"

namespace rideshare {
namespace {

void CheckOrientation(std::span<const Request> requests, Node start,
                      Node end) {
  for (const Request& r : requests) {
    const Node lo = std::min(r.origin, r.destination);
    const Node hi = std::max(r.origin, r.destination);
    if (lo < start || hi > end) {
      throw ContractError("normalize requires start <= endpoints <= end; (" +
                          std::to_string(r.origin) + "," +
                          std::to_string(r.destination) + ") lies outside [" +
                          std::to_string(start) + "," + std::to_string(end) +
                          "]");
    }
  }
}

NormalForm Finish(std::vector<Request> pairs) {
  std::sort(pairs.begin(), pairs.end());
  NormalForm out{std::move(pairs)};
  if (!out.IsWellFormed()) {
    throw InternalError("normalize produced a set that is not in normal form");
  }
  return out;
}

}  // namespace

bool NormalForm::IsWellFormed() const {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!(pairs[i].destination < pairs[i].origin)) return false;
    if (i + 1 < pairs.size() && !(pairs[i].origin < pairs[i + 1].destination)) {
      return false;
    }
  }
  return true;
}

NormalForm Normalize(std::span<const Request> requests, Node start, Node end) {
  CheckOrientation(requests, start, end);

  std::vector<Request> backward;
  for (const Request& r : requests) {
    if (r.IsBackward()) backward.push_back(r);
  }
  if (backward.empty()) return {};
  CanonicalizeRequests(backward);  // sorted by origin

  std::vector<Request> by_destination = backward;
  std::sort(by_destination.begin(), by_destination.end(),
            [](const Request& a, const Request& b) {
              return a.destination < b.destination;
            });
  const std::vector<Node> nodes = CollectNodes(backward);

  // S1: requests ending at the current node; S2: requests spanning it,
  // keyed by origin; S3: requests starting at it.
  std::vector<Request> ending_here;
  std::priority_queue<Node, std::vector<Node>, std::greater<>> spanning;
  std::size_t starting_here = 0;
  std::vector<Node> destinations;  // L
  std::vector<Node> origins;       // R

  std::size_t next_by_destination = 0;
  for (Node w : nodes) {
    starting_here = 0;
    for (const Request& r : ending_here) spanning.push(r.origin);
    ending_here.clear();
    while (!spanning.empty() && spanning.top() == w) {
      spanning.pop();
      ++starting_here;
    }
    while (next_by_destination < by_destination.size() &&
           by_destination[next_by_destination].destination == w) {
      ending_here.push_back(by_destination[next_by_destination++]);
    }
    if (!ending_here.empty() && spanning.empty() && starting_here == 0) {
      destinations.push_back(w);
    } else if (ending_here.empty() && spanning.empty() && starting_here > 0) {
      origins.push_back(w);
    }
  }

  if (destinations.size() != origins.size()) {
    throw InternalError("normalize sweep found unbalanced endpoint lists");
  }
  std::vector<Request> pairs;
  pairs.reserve(origins.size());
  for (std::size_t i = 0; i < origins.size(); ++i) {
    pairs.push_back({origins[i], destinations[i]});
  }
  return Finish(std::move(pairs));
}

NormalForm NormalizeNaive(std::span<const Request> requests, Node start,
                          Node end) {
  CheckOrientation(requests, start, end);

  std::set<Request> current;
  for (const Request& r : requests) {
    if (r.IsBackward()) current.insert(r);
  }

  // Returns the first ordered pair (a, b) of distinct requests for which
  // `applies(a, b)` holds.
  auto find_pair = [&current](auto applies)
      -> std::optional<std::pair<Request, Request>> {
    for (const Request& a : current) {
      for (const Request& b : current) {
        if (a != b && applies(a, b)) return std::make_pair(a, b);
      }
    }
    return std::nullopt;
  };

  // (s,t), (s',t') with t' <= t <= s' <= s  ->  (s,t').
  while (auto hit = find_pair([](const Request& a, const Request& b) {
           return b.destination <= a.destination &&
                  a.destination <= b.origin && b.origin <= a.origin;
         })) {
    const auto [a, b] = *hit;
    current.erase(a);
    current.erase(b);
    current.insert({a.origin, b.destination});
  }

  // (s,t) dominated by (s',t') with t' <= t < s <= s'.
  while (auto hit = find_pair([](const Request& a, const Request& b) {
           return b.destination <= a.destination &&
                  a.destination < a.origin && a.origin <= b.origin;
         })) {
    current.erase(hit->first);
  }

  return Finish(std::vector<Request>(current.begin(), current.end()));
}

}  // namespace rideshare
