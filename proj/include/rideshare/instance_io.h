#ifndef RIDESHARE_INSTANCE_IO_H_
#define RIDESHARE_INSTANCE_IO_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rideshare/graph.h"
#include "rideshare/ride.h"
#include "rideshare/weight.h"

namespace rideshare {

// Instance files:
//   {"topology": "path" | "cycle" | "general", "n": N,
//    "weights": ["1", "3/2", ...]          (path: n-1 entries, cycle: n)
//    "edges": [[u, v, "w"], ...]           (general only)
//    "start": s0, "end": t0, "requests": [[s, t], ...]}
// Weights are strings (or non-negative JSON integers) holding exact
// rationals. Every failure throws ParseError with a message naming the
// problem.
Scenario ParseInstance(std::string_view text);
std::string EmitInstance(const Scenario& scenario);

struct SolutionFile {
  Weight cost;
  std::vector<Node> waypoints;
  std::optional<std::vector<Node>> ride;  // full expansion, if requested
  bool feasible = true;
  std::string solver;  // "path", "cycle" or "oracle"

  friend bool operator==(const SolutionFile&, const SolutionFile&) = default;
};

SolutionFile ParseSolution(std::string_view text);
std::string EmitSolution(const SolutionFile& solution);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

}  // namespace rideshare

#endif  // RIDESHARE_INSTANCE_IO_H_
