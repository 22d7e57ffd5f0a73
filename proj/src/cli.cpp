#include "densekit/cli.hpp"

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <CLI11.hpp>

#include "densekit/bench.hpp"
#include "densekit/brute_force.hpp"
#include "densekit/dual_cert.hpp"
#include "densekit/error.hpp"
#include "densekit/exact.hpp"
#include "densekit/generators.hpp"
#include "densekit/mwu.hpp"
#include "densekit/peeling.hpp"
#include "densekit/report.hpp"

namespace densekit {

namespace {

struct Settings {
  std::string command;
  std::string input;
  std::string generate;
  std::optional<std::int64_t> iters;
  double eps = 0.1;
  double delta = 0.01;
  double mwu_constant = 8.0;
  std::optional<double> scale;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::string tracker = "auto";
  bool weighted = false;
  bool timing = false;
  bool no_timing = false;
  bool with_optimum = false;
  bool parallel = false;
  std::string dimacs;
};

std::string fmt_double(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

MinTracker tracker_of(const std::string& name) {
  if (name == "buckets") return MinTracker::buckets;
  if (name == "heap") return MinTracker::heap;
  return MinTracker::automatic;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

Graph generate(const std::string& spec, std::uint64_t seed) {
  const auto parts = split(spec, ':');
  try {
    if (parts.size() == 3 && parts[0] == "er") {
      return gen::erdos_renyi(std::stoi(parts[1]), std::stod(parts[2]), seed);
    }
    if (parts.size() == 4 && parts[0] == "family") {
      return gen::bipartite_plus_cliques(std::stoi(parts[1]), std::stoi(parts[2]), std::stoi(parts[3]));
    }
  } catch (const std::logic_error&) {
    // fall through to the error below
  }
  throw InputError("unknown generator '" + spec + "' (expected er:N:P or family:d:D:k)");
}

// Graph handed to the exact solver: scaled to integers when requested.
Graph exact_input(const Graph& g, const Settings& s) {
  if (s.scale && !g.integral()) return scale_to_integral(g, *s.scale);
  return g;
}

std::optional<DensityValue> try_optimum(const Graph& g, const Settings& s, report::ExperimentReport& r) {
  try {
    const auto exact = exact_densest(exact_input(g, s));
    return density(g, exact.subset);
  } catch (const SolverRefusal& e) {
    r.notes.push_back(std::string("optimum unavailable: ") + e.what());
    return std::nullopt;
  }
}

void set_best(report::ExperimentReport& r, const Graph& g, const std::vector<VertexId>& subset) {
  r.best_density = density(g, subset);
  r.best_subset = to_labels(g, subset);
}

int execute(const Settings& s, std::ostream& out) {
  ParseOptions parse_options;
  parse_options.weighted = s.weighted;
  report::ExperimentReport r;
  parse_options.on_warning = [&r](const std::string& w) { r.notes.push_back(w); };

  Graph g;
  std::string source;
  if (!s.generate.empty()) {
    g = generate(s.generate, s.seed);
    source = "generate:" + s.generate;
  } else if (!s.input.empty()) {
    g = read_edge_list_file(s.input, parse_options);
    source = s.input;
  } else {
    throw InputError("an input file or --generate is required");
  }
  if (g.m() == 0) throw EmptyGraphError();

  const auto tracker = tracker_of(s.tracker);
  const bool timing = s.command == "bench" ? !s.no_timing : s.timing;
  r.command = s.command;
  r.graph = report::describe(g, source);
  r.config.emplace_back("tracker", s.tracker);
  r.config.emplace_back("seed", std::to_string(s.seed));
  if (s.scale) r.config.emplace_back("scale", fmt_double(*s.scale));

  using clock = std::chrono::steady_clock;
  auto elapsed_ms = [](clock::time_point start) {
    return std::chrono::duration<double, std::milli>(clock::now() - start).count();
  };

  if (s.command == "peel" || s.command == "greedypp" || s.command == "certify") {
    std::int64_t iterations = 1;
    if (s.command == "greedypp") iterations = s.iters.value_or(12);
    if (s.command == "certify") iterations = s.iters.value_or(100);
    r.config.emplace_back("iters", std::to_string(iterations));
    if (s.command == "certify") r.config.emplace_back("delta", fmt_double(s.delta));

    std::optional<DensityValue> optimum;
    if (s.with_optimum) optimum = try_optimum(g, s, r);

    GreedyPPOptions options;
    options.tracker = tracker;
    std::vector<double> times;
    const auto start = clock::now();
    bool converged = false;
    options.observer = [&](const IterationSummary& summary, const LoadVector& loads) {
      times.push_back(elapsed_ms(start));
      if (s.command != "certify" || g.is_signed()) return true;
      const auto cert = certify(summary.running_best, loads, summary.iteration);
      converged = cert.ratio >= 1.0 - s.delta;
      return !converged;
    };
    const auto run = greedy_pp(g, iterations, options);
    set_best(r, g, run.best_subset());
    if (!g.is_signed()) {
      r.certificate = certify(run.best_density, run.final_loads, run.iterations);
    } else {
      r.notes.push_back("signed graph: load bounds do not certify the optimum");
    }
    r.convergence = report::rows_from_run(run, optimum, !g.is_signed());
    if (timing) {
      for (std::size_t i = 0; i < r.convergence.size(); ++i) r.convergence[i].ms = times[i];
    }
    r.solvers.push_back({s.command == "peel" ? "charikar" : "greedy++", *r.best_density,
                         static_cast<std::int64_t>(r.best_subset.size()),
                         timing ? std::optional<double>(times.back()) : std::nullopt});
    if (s.command == "certify") {
      r.iterations_used = run.iterations;
      r.notes.push_back(converged ? "certificate reached 1 - delta" : "iteration cap reached before 1 - delta");
    }
  } else if (s.command == "exact") {
    const auto input = exact_input(g, s);
    const auto start = clock::now();
    const auto exact = exact_densest(input);
    const double ms = elapsed_ms(start);
    set_best(r, g, exact.subset);
    r.config.emplace_back("flow_queries", std::to_string(exact.flow_queries));
    r.solvers.push_back({"exact", *r.best_density, static_cast<std::int64_t>(exact.subset.size()),
                         timing ? std::optional<double>(ms) : std::nullopt});
    if (!s.dimacs.empty()) {
      std::ofstream file(s.dimacs);
      if (!file) throw InputError("cannot write '" + s.dimacs + "'");
      const auto& d = exact.density;
      const auto net = build_feasibility_network(
          input, {std::max<std::int64_t>(1, std::llround(d.numerator)), d.denominator});
      net.write_dimacs(file);
    }
  } else if (s.command == "mwu") {
    mwu::MwuOptions options;
    options.eps = s.eps;
    options.max_iters = s.iters;
    options.iteration_constant = s.mwu_constant;
    options.parallel = s.parallel;
    r.config.emplace_back("eps", fmt_double(s.eps));
    r.config.emplace_back("mwu_constant", fmt_double(s.mwu_constant));
    const auto start = clock::now();
    const auto result = mwu::mwu_solve(g, options);
    const double ms = elapsed_ms(start);
    r.mwu = report::MwuSummary{result.average_value, result.max_load, result.rounds,
                               result.eta, result.width, s.eps};
    if (timing) r.notes.push_back("mwu_ms=" + fmt_double(ms));
  } else if (s.command == "oracle") {
    const auto best = brute_force_densest(g);
    set_best(r, g, best.subset);
    r.solvers.push_back({"brute_force", *r.best_density, static_cast<std::int64_t>(best.subset.size()), std::nullopt});
  } else if (s.command == "bench") {
    bench::BenchConfig config;
    config.max_iterations = s.iters.value_or(100);
    config.tracker = tracker;
    config.timing = timing;
    config.weight_scale = s.scale;
    r.config.emplace_back("iters", std::to_string(config.max_iterations));
    r.bench = bench::run_bench(g, config);
    const auto run = greedy_pp(g, r.bench->iterations_run, {.tracker = tracker, .charge_counts = nullptr, .observer = {}});
    set_best(r, g, run.best_subset());
    r.convergence = report::rows_from_run(run, r.bench->optimum, !g.is_signed());
    if (r.bench->below_timer_resolution) r.notes.push_back("timings below timer resolution (n < 50)");
  }

  out << (s.format == "csv" ? report::emit_csv(r) : report::emit_json(r));
  return 0;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"densekit: densest subgraph discovery"};
  Settings s;
  app.add_option("command", s.command, "peel | greedypp | exact | mwu | certify | bench | oracle")
      ->required()
      ->check(CLI::IsMember({"peel", "greedypp", "exact", "mwu", "certify", "bench", "oracle"}));
  app.add_option("input", s.input, "SNAP-style edge list");
  app.add_option("--generate", s.generate, "synthetic input: er:N:P or family:d:D:k");
  app.add_option("--iters", s.iters, "iteration count / cap")->check(CLI::PositiveNumber);
  app.add_option("--eps", s.eps, "MWU accuracy in (0,1)");
  app.add_option("--delta", s.delta, "certify: stop once ratio >= 1 - delta");
  app.add_option("--mwu-constant", s.mwu_constant, "constant in the MWU round bound");
  app.add_option("--scale", s.scale, "multiply weights by this factor to make them integral (exact)");
  app.add_option("--format", s.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", s.seed, "seed for generated inputs");
  app.add_option("--tracker", s.tracker, "auto | buckets | heap")->check(CLI::IsMember({"auto", "buckets", "heap"}));
  app.add_option("--dimacs", s.dimacs, "exact: write the feasibility network at the optimum");
  app.add_flag("--weighted", s.weighted, "input lines carry a third weight column");
  app.add_flag("--timing", s.timing, "include wall-clock times");
  app.add_flag("--no-timing", s.no_timing, "bench: omit wall-clock times");
  app.add_flag("--with-optimum", s.with_optimum, "compute the exact optimum for accuracy columns");
  app.add_flag("--parallel", s.parallel, "mwu: use the OpenMP oracle kernel");

  std::vector<const char*> argv{"densekit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (const char* threads = std::getenv("DENSEKIT_THREADS")) {
    const int cap = std::atoi(threads);
    if (cap > 0) omp_set_num_threads(cap);
  }

  try {
    return execute(s, out);
  } catch (const SolverRefusal& e) {
    err << "refused: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace densekit
