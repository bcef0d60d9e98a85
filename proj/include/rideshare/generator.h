#ifndef RIDESHARE_GENERATOR_H_
#define RIDESHARE_GENERATOR_H_

#include <cstdint>
#include <random>

#include "rideshare/graph.h"

namespace rideshare {

// Integer draws built only on the raw mt19937_64 stream, so a seed gives the
// same numbers with every standard library (std::uniform_int_distribution
// does not promise that).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi]; requires lo <= hi.
  std::int64_t Uniform(std::int64_t lo, std::int64_t hi);
  bool Coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

struct GeneratorOptions {
  Topology topology = Topology::kPath;
  Node n = 10;
  int requests = 3;
  std::int64_t min_weight = 1;
  std::int64_t max_weight = 1;
  std::uint64_t seed = 0;
  // When > 0, request endpoints are drawn from exactly this many distinct
  // nodes, each used at least once; needs 2 * requests >= endpoints.
  Node endpoints = 0;
  // General graphs: random edges added on top of a random spanning tree.
  int extra_edges = -1;  // -1: n
};

// Uniform endpoints and start/end, integer weights in [min_weight,
// max_weight]. Throws DomainError on inconsistent options.
Scenario Generate(const GeneratorOptions& options);

}  // namespace rideshare

#endif  // RIDESHARE_GENERATOR_H_
