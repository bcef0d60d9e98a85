#ifndef RIDESHARE_ORACLE_H_
#define RIDESHARE_ORACLE_H_

#include <cstdint>
#include <optional>

#include "rideshare/graph.h"
#include "rideshare/ride.h"
#include "rideshare/weight.h"

namespace rideshare {

inline constexpr std::int64_t kDefaultOracleBudget = 5'000'000;

struct OracleResult {
  bool feasible = false;
  Weight cost;               // meaningful only when feasible
  std::optional<Ride> ride;  // expanded witness walk when feasible
  std::int64_t states_settled = 0;
};

// Exact optimum on any graph by Dijkstra over (node, request status) pairs,
// where each request is pending, picked up, or delivered. Arriving at a node
// first picks up every request starting there, then delivers every picked-up
// request ending there.
//
// Throws OracleTooLargeError when n * 3^|C| exceeds `budget`; a negative
// budget disables the check. Reports infeasible only on disconnected graphs.
OracleResult BruteForceOptimal(const Scenario& scenario,
                               std::int64_t budget = kDefaultOracleBudget);

}  // namespace rideshare

#endif  // RIDESHARE_ORACLE_H_
