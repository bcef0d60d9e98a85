#include "rideshare/cli.h"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rideshare/cycle_solver.h"
#include "rideshare/errors.h"
#include "rideshare/generator.h"
#include "rideshare/instance_io.h"
#include "rideshare/oracle.h"
#include "rideshare/path_solver.h"

namespace rideshare {
namespace {

struct SolveFlags {
  std::string input;
  std::string output;
  bool emit_ride = false;
  bool force_oracle = false;
  std::int64_t budget = kDefaultOracleBudget;
};

struct VerifyFlags {
  std::string input;
  std::string solution;
};

struct GenFlags {
  std::string topology = "path";
  Node n = 10;
  int requests = 3;
  std::int64_t min_weight = 1;
  std::int64_t max_weight = 1;
  std::uint64_t seed = 0;
  Node endpoints = 0;
  int extra_edges = -1;
  std::string output;
};

struct BenchFlags {
  std::string suite = "path";
  std::vector<std::int64_t> sizes;
  int reps = 5;
  std::uint64_t seed = 1;
  Node cycle_n = 2000;
  std::int64_t ratio = 10;
  std::string output;
};

void Emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    WriteFile(path, text);
  }
}

SolutionFile FromRide(const Ride& ride, const Weight& cost, const Graph& graph,
                      bool emit_ride, std::string solver) {
  SolutionFile s;
  s.cost = cost;
  s.waypoints = ride.waypoints();
  if (emit_ride) s.ride = Expand(ride, graph);
  s.feasible = true;
  s.solver = std::move(solver);
  return s;
}

int RunOracle(const Scenario& scenario, const SolveFlags& f, std::int64_t budget,
              std::ostream& out, std::ostream& err) {
  const OracleResult r = BruteForceOptimal(scenario, budget);
  if (!r.feasible) {
    err << "no feasible ride: the requests are not connected to start and end\n";
    return kExitInfeasible;
  }
  Emit(f.output,
       EmitSolution(FromRide(*r.ride, r.cost, scenario.graph(), f.emit_ride, "oracle")),
       out);
  return kExitOk;
}

int Solve(const SolveFlags& f, std::ostream& out, std::ostream& err) {
  const Scenario scenario = ParseInstance(ReadFile(f.input));
  switch (scenario.graph().topology()) {
    case Topology::kPath: {
      const PathSolution s = SolvePath(scenario);
      Emit(f.output,
           EmitSolution(FromRide(s.ride, s.cost, scenario.graph(), f.emit_ride, "path")),
           out);
      return kExitOk;
    }
    case Topology::kCycle: {
      const CycleSolution s = SolveCycle(scenario);
      Emit(f.output,
           EmitSolution(FromRide(s.ride, s.cost, scenario.graph(), f.emit_ride, "cycle")),
           out);
      return kExitOk;
    }
    case Topology::kGeneral:
      if (!f.force_oracle) {
        err << "solve handles path and cycle instances only; use the oracle "
               "command or --force-oracle for general graphs\n";
        return kExitUsage;
      }
      return RunOracle(scenario, f, f.budget, out, err);
  }
  return kExitUsage;
}

int Oracle(const SolveFlags& f, std::ostream& out, std::ostream& err) {
  const Scenario scenario = ParseInstance(ReadFile(f.input));
  return RunOracle(scenario, f, f.force_oracle ? -1 : f.budget, out, err);
}

int Verify(const VerifyFlags& f, std::ostream& out, std::ostream& err) {
  const Scenario scenario = ParseInstance(ReadFile(f.input));
  const SolutionFile solution = ParseSolution(ReadFile(f.solution));
  std::vector<Node> walk;
  try {
    walk = Expand(Ride(solution.waypoints), scenario.graph());
    if (solution.ride && *solution.ride != walk) {
      err << "infeasible: ride does not match the expansion of the waypoints\n";
      return kExitInfeasible;
    }
  } catch (const MalformedRideError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  }
  const Feasibility feasibility = IsFeasible(walk, scenario);
  if (!feasibility) {
    err << "infeasible: " << feasibility.Describe() << "\n";
    return kExitInfeasible;
  }
  const Weight cost = WalkCost(walk, scenario.graph());
  if (cost != solution.cost) {
    err << "cost mismatch: solution claims " << solution.cost
        << ", ride costs " << cost << "\n";
    return kExitCostMismatch;
  }
  out << "ok cost=" << cost << "\n";
  return kExitOk;
}

Topology ParseTopology(const std::string& name) {
  if (name == "path") return Topology::kPath;
  if (name == "cycle") return Topology::kCycle;
  if (name == "general") return Topology::kGeneral;
  throw ParseError("unknown topology \"" + name + "\"");
}

int Gen(const GenFlags& f, std::ostream& out) {
  GeneratorOptions o;
  o.topology = ParseTopology(f.topology);
  o.n = f.n;
  o.requests = f.requests;
  o.min_weight = f.min_weight;
  o.max_weight = f.max_weight;
  o.seed = f.seed;
  o.endpoints = f.endpoints;
  o.extra_edges = f.extra_edges;
  Emit(f.output, EmitInstance(Generate(o)), out);
  return kExitOk;
}

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2;
}

int Bench(const BenchFlags& f, std::ostream& out, std::ostream& err) {
  if (f.suite != "path" && f.suite != "cycle") {
    err << "unknown suite \"" << f.suite << "\"\n";
    return kExitUsage;
  }
  if (f.reps < 5) {
    err << "bench needs at least 5 repetitions\n";
    return kExitUsage;
  }
  std::ostringstream table;
  table << "suite\tn\trequests\tendpoints\treps\tmedian_ms\tcost\n";
  for (std::int64_t size : f.sizes) {
    GeneratorOptions o;
    o.seed = f.seed;
    if (f.suite == "path") {
      o.topology = Topology::kPath;
      o.n = static_cast<Node>(size);
      o.requests = static_cast<int>(std::max<std::int64_t>(1, size / f.ratio));
    } else {
      o.topology = Topology::kCycle;
      o.n = f.cycle_n;
      o.endpoints = static_cast<Node>(size);
      o.requests = static_cast<int>(size);
    }
    const Scenario scenario = Generate(o);
    std::vector<double> ms;
    Weight cost;
    for (int rep = 0; rep < f.reps; ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      cost = f.suite == "path" ? SolvePath(scenario).cost
                               : SolveCycle(scenario).cost;
      const auto t1 = std::chrono::steady_clock::now();
      ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    table << f.suite << '\t' << scenario.n() << '\t'
          << scenario.requests().size() << '\t' << scenario.endpoints().size()
          << '\t' << f.reps << '\t' << Median(ms) << '\t' << cost << '\n';
  }
  Emit(f.output, table.str(), out);
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Exact single-vehicle ride sharing on paths and cycles",
               "rideshare"};
  app.require_subcommand(1);

  SolveFlags solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "optimal ride for a path or cycle instance");
  solve_cmd->add_option("--input", solve.input, "instance JSON")->required();
  solve_cmd->add_option("--output", solve.output, "solution JSON (default stdout)");
  solve_cmd->add_flag("--emit-ride", solve.emit_ride, "include the expanded ride");
  solve_cmd->add_flag("--force-oracle", solve.force_oracle,
                      "solve general graphs with the oracle");
  solve_cmd->add_option("--budget", solve.budget, "oracle state budget");

  SolveFlags oracle;
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force optimum on any graph");
  oracle_cmd->add_option("--input", oracle.input, "instance JSON")->required();
  oracle_cmd->add_option("--output", oracle.output, "solution JSON (default stdout)");
  oracle_cmd->add_option("--budget", oracle.budget, "maximum n*3^|C| states");
  oracle_cmd->add_flag("--force-oracle", oracle.force_oracle, "ignore the budget");
  oracle_cmd->add_flag("--emit-ride", oracle.emit_ride, "include the expanded ride");

  VerifyFlags verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "check a solution against an instance");
  verify_cmd->add_option("--input", verify.input, "instance JSON")->required();
  verify_cmd->add_option("--solution", verify.solution, "solution JSON")->required();

  GenFlags gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "seeded random instance");
  gen_cmd->add_option("--topology", gen.topology, "path, cycle or general")
      ->check(CLI::IsMember({"path", "cycle", "general"}));
  gen_cmd->add_option("--n", gen.n, "node count")->required();
  gen_cmd->add_option("--requests", gen.requests, "request count")->required();
  gen_cmd->add_option("--min-weight", gen.min_weight, "smallest edge weight");
  gen_cmd->add_option("--max-weight", gen.max_weight, "largest edge weight");
  gen_cmd->add_option("--seed", gen.seed, "random seed")->required();
  gen_cmd->add_option("--endpoints", gen.endpoints, "number of distinct request endpoints");
  gen_cmd->add_option("--extra-edges", gen.extra_edges, "general graphs: edges beyond a spanning tree");
  gen_cmd->add_option("--output", gen.output, "instance JSON (default stdout)");

  BenchFlags bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "timing table over a size ladder");
  bench_cmd->add_option("--suite", bench.suite, "path or cycle")
      ->check(CLI::IsMember({"path", "cycle"}));
  bench_cmd->add_option("--sizes", bench.sizes,
                        "path: node counts; cycle: distinct endpoint counts")
      ->required();
  bench_cmd->add_option("--reps", bench.reps, "repetitions per size (>= 5)");
  bench_cmd->add_option("--seed", bench.seed, "random seed");
  bench_cmd->add_option("--n", bench.cycle_n, "cycle suite: node count");
  bench_cmd->add_option("--ratio", bench.ratio, "path suite: nodes per request");
  bench_cmd->add_option("--output", bench.output, "table file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve_cmd) return Solve(solve, out, err);
    if (*oracle_cmd) return Oracle(oracle, out, err);
    if (*verify_cmd) return Verify(verify, out, err);
    if (*gen_cmd) return Gen(gen, out);
    if (*bench_cmd) return Bench(bench, out, err);
  } catch (const OracleTooLargeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace rideshare
