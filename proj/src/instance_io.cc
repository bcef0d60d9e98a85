#include "rideshare/instance_io.h"

#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "rideshare/errors.h"

namespace rideshare {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void Schema(const std::string& what) {
  throw ParseError("schema violation: " + what);
}

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

const Json& Field(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) Schema(std::string("missing field \"") + key + "\"");
  return *it;
}

std::int64_t Integer(const Json& v, const std::string& what) {
  if (!v.is_number_integer()) Schema(what + " must be an integer");
  return v.get<std::int64_t>();
}

Node NodeValue(const Json& v, std::int64_t n, const std::string& what) {
  const std::int64_t x = Integer(v, what);
  if (x < 1 || x > n) {
    throw ParseError("node out of range: " + what + " = " + std::to_string(x) +
                     " is not in 1.." + std::to_string(n));
  }
  return static_cast<Node>(x);
}

Weight WeightValue(const Json& v, const std::string& what) {
  std::string text;
  if (v.is_string()) {
    text = v.get<std::string>();
  } else if (v.is_number_integer()) {
    text = std::to_string(v.get<std::int64_t>());
  } else {
    Schema(what + " must be a rational string");
  }
  if (!text.empty() && text.front() == '-') {
    throw ParseError("negative weight: " + what + " = " + text);
  }
  try {
    return Weight::Parse(text);
  } catch (const std::invalid_argument&) {
    Schema(what + " = \"" + text + "\" is not of the form p or p/q");
  }
}

const Json& Array(const Json& v, const std::string& what) {
  if (!v.is_array()) Schema(what + " must be an array");
  return v;
}

}  // namespace

Scenario ParseInstance(std::string_view text) {
  const Json doc = ParseJson(text);
  if (!doc.is_object()) Schema("instance must be a JSON object");

  const Json& topo = Field(doc, "topology");
  if (!topo.is_string()) Schema("topology must be a string");
  const std::string topology = topo.get<std::string>();
  if (topology != "path" && topology != "cycle" && topology != "general") {
    Schema("unknown topology \"" + topology + "\"");
  }
  const std::int64_t n = Integer(Field(doc, "n"), "n");
  if (n < 1 || n > std::numeric_limits<Node>::max() / 4) {
    Schema("n = " + std::to_string(n) + " is out of the supported range");
  }
  if (topology == "cycle" && n <= 2) {
    throw ParseError("cycle needs at least 3 nodes, got n = " +
                     std::to_string(n));
  }

  const bool has_weights = doc.contains("weights");
  const bool has_edges = doc.contains("edges");
  std::shared_ptr<const Graph> graph;
  if (topology == "general") {
    if (has_weights || !has_edges) {
      Schema("general topology needs \"edges\" and no \"weights\"");
    }
    std::vector<Edge> edges;
    for (const Json& e : Array(doc["edges"], "edges")) {
      if (!e.is_array() || e.size() != 3) Schema("each edge must be [u, v, w]");
      const Node u = NodeValue(e[0], n, "edge endpoint");
      const Node v = NodeValue(e[1], n, "edge endpoint");
      if (u == v) Schema("self-loop at node " + std::to_string(u));
      edges.push_back({u, v, WeightValue(e[2], "edge weight")});
    }
    graph = std::make_shared<const Graph>(
        Graph::General(static_cast<Node>(n), std::move(edges)));
  } else {
    if (has_edges || !has_weights) {
      Schema(topology + " topology needs \"weights\" and no \"edges\"");
    }
    const Json& w = Array(doc["weights"], "weights");
    const std::int64_t expected = topology == "path" ? n - 1 : n;
    if (static_cast<std::int64_t>(w.size()) != expected) {
      Schema(topology + " with n = " + std::to_string(n) + " needs " +
             std::to_string(expected) + " weights, got " +
             std::to_string(w.size()));
    }
    std::vector<Weight> weights;
    weights.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      weights.push_back(WeightValue(w[i], "weights[" + std::to_string(i) + "]"));
    }
    graph = std::make_shared<const Graph>(topology == "path"
                                              ? Graph::Path(std::move(weights))
                                              : Graph::Cycle(std::move(weights)));
  }

  const Node start = NodeValue(Field(doc, "start"), n, "start");
  const Node end = NodeValue(Field(doc, "end"), n, "end");
  std::vector<Request> requests;
  for (const Json& r : Array(Field(doc, "requests"), "requests")) {
    if (!r.is_array() || r.size() != 2) Schema("each request must be [s, t]");
    requests.push_back(
        {NodeValue(r[0], n, "request origin"), NodeValue(r[1], n, "request destination")});
  }
  if (requests.empty()) throw ParseError("empty requests: at least one is needed");
  return Scenario(std::move(graph), start, end, std::move(requests));
}

std::string EmitInstance(const Scenario& scenario) {
  const Graph& g = scenario.graph();
  Json doc;
  doc["topology"] = std::string(TopologyName(g.topology()));
  doc["n"] = g.n();
  if (g.IsLine()) {
    Json weights = Json::array();
    for (const Weight& w : g.line_weights()) weights.push_back(w.ToString());
    doc["weights"] = std::move(weights);
  } else {
    Json edges = Json::array();
    for (const Edge& e : g.edges()) {
      edges.push_back(Json::array({e.u, e.v, e.weight.ToString()}));
    }
    doc["edges"] = std::move(edges);
  }
  doc["start"] = scenario.start();
  doc["end"] = scenario.end();
  Json requests = Json::array();
  for (const Request& r : scenario.requests()) {
    requests.push_back(Json::array({r.origin, r.destination}));
  }
  doc["requests"] = std::move(requests);
  return doc.dump() + "\n";
}

SolutionFile ParseSolution(std::string_view text) {
  const Json doc = ParseJson(text);
  if (!doc.is_object()) Schema("solution must be a JSON object");
  SolutionFile out;
  out.cost = WeightValue(Field(doc, "cost"), "cost");
  auto nodes = [](const Json& arr, const std::string& what) {
    std::vector<Node> v;
    for (const Json& x : Array(arr, what)) {
      const std::int64_t i = Integer(x, what + " entry");
      if (i < 1 || i > std::numeric_limits<Node>::max()) {
        throw ParseError("node out of range: " + what + " entry " +
                         std::to_string(i));
      }
      v.push_back(static_cast<Node>(i));
    }
    if (v.empty()) Schema(what + " must not be empty");
    return v;
  };
  out.waypoints = nodes(Field(doc, "waypoints"), "waypoints");
  if (doc.contains("ride") && !doc["ride"].is_null()) {
    out.ride = nodes(doc["ride"], "ride");
  }
  const Json& feasible = Field(doc, "feasible");
  if (!feasible.is_boolean()) Schema("feasible must be a boolean");
  out.feasible = feasible.get<bool>();
  const Json& solver = Field(doc, "solver");
  if (!solver.is_string()) Schema("solver must be a string");
  out.solver = solver.get<std::string>();
  if (out.solver != "path" && out.solver != "cycle" && out.solver != "oracle") {
    Schema("unknown solver \"" + out.solver + "\"");
  }
  return out;
}

std::string EmitSolution(const SolutionFile& solution) {
  Json doc;
  doc["cost"] = solution.cost.ToString();
  doc["waypoints"] = solution.waypoints;
  if (solution.ride) doc["ride"] = *solution.ride;
  doc["feasible"] = solution.feasible;
  doc["solver"] = solution.solver;
  return doc.dump() + "\n";
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  out << contents;
  if (!out) throw Error("failed writing " + path);
}

}  // namespace rideshare
