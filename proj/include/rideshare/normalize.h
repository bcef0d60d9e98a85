#ifndef RIDESHARE_NORMALIZE_H_
#define RIDESHARE_NORMALIZE_H_

#include <span>
#include <vector>

#include "rideshare/graph.h"

namespace rideshare {

// Backward requests (destination < origin) sorted by origin and strictly
// interleaved: t_1 < s_1 < t_2 < s_2 < ... < t_h < s_h.
struct NormalForm {
  std::vector<Request> pairs;

  bool IsWellFormed() const;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

// Reduces `requests` to the normal form with the same optimal rides, for a
// vehicle travelling left to right: requires start <= every endpoint <= end,
// otherwise throws ContractError. An empty request set is allowed.
//
// Sweep over the sorted endpoints in O(|C| log |C|): a node is the
// destination of an output pair iff some backward request ends there and none
// spans or starts there; symmetrically for origins. The two node lists are
// then zipped.
NormalForm Normalize(std::span<const Request> requests, Node start, Node end);

// Reference implementation: drop forward requests, merge overlapping
// backward pairs, then drop dominated ones, each repeated to a fixpoint.
// Polynomial but slow; kept for cross-checking.
NormalForm NormalizeNaive(std::span<const Request> requests, Node start,
                          Node end);

}  // namespace rideshare

#endif  // RIDESHARE_NORMALIZE_H_
