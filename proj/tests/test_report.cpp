#include <doctest.h>

#include "densekit/bench.hpp"
#include "densekit/error.hpp"
#include "densekit/generators.hpp"
#include "densekit/report.hpp"

using namespace densekit;

namespace {

report::ExperimentReport sample_report() {
  const auto g = gen::bipartite_plus_cliques(4, 50, 30);
  const auto run = greedy_pp(g, 3);
  report::ExperimentReport r;
  r.command = "greedypp";
  r.graph = report::describe(g, "generate:family:4:50:30");
  r.config = {{"iters", "3"}, {"tracker", "auto"}};
  r.best_density = run.best_density;
  r.best_subset = to_labels(g, run.best_subset());
  r.certificate = certify(run.best_density, run.final_loads, 3);
  r.iterations_used = 3;
  r.convergence = report::rows_from_run(run, DensityValue{100, 27, true});
  r.convergence[1].ms = 0.25;
  r.solvers.push_back({"greedy++", run.best_density, 54, std::nullopt});
  r.mwu = report::MwuSummary{1.0, 1.1, 10, 0.025, 2.0, 0.1};
  report::BenchSummary b;
  b.optimum = DensityValue{100, 27, true};
  b.iterations_run = 3;
  b.iterations_to_90 = 2;
  b.below_timer_resolution = true;
  r.bench = b;
  r.notes = {"a note"};
  return r;
}

}  // namespace

TEST_CASE("json round trip") {
  const auto r = sample_report();
  const auto text = report::emit_json(r);
  CHECK(report::parse_json(text) == r);
  CHECK(report::emit_json(report::parse_json(text)) == text);
  CHECK(text.find("\"schema\": \"densekit.report/1\"") != std::string::npos);
  CHECK_THROWS_AS(report::parse_json("{not json"), InputError);
}

TEST_CASE("csv layout") {
  const auto csv = report::emit_csv(sample_report());
  CHECK(csv.rfind("iter,density,accuracy,dual_bound,ms\n", 0) == 0);
  report::ExperimentReport solvers_only;
  solvers_only.solvers.push_back({"exact", DensityValue{3, 2, true}, 4, std::nullopt});
  CHECK(report::emit_csv(solvers_only).rfind("solver,density,subset_size,ms\n", 0) == 0);
}

TEST_CASE("convergence rows on a triangle") {
  const auto rows = report::convergence_report(gen::complete(3), 2, DensityValue{3, 3, true});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].iter == 1);
  CHECK(rows[0].density == 1.0);
  CHECK(rows[0].accuracy == 1.0);
  CHECK(rows[0].accuracy_kind == "exact");
  CHECK(rows[0].dual_bound == 2.0);
  CHECK(rows[1].dual_bound == 1.0);
  CHECK_FALSE(rows[0].ms.has_value());

  const auto uncertain = report::convergence_report(gen::complete(3), 2, std::nullopt);
  CHECK(uncertain[0].accuracy_kind == "certified_lower_bound");
  CHECK(uncertain[0].accuracy == 0.5);
  CHECK(uncertain[1].accuracy == 1.0);
}

TEST_CASE("convergence on the bipartite family") {
  const auto g = gen::bipartite_plus_cliques(4, 50, 30);
  const auto rows = report::convergence_report(g, 5, DensityValue{100, 27, true});
  CHECK(*rows[0].accuracy == doctest::Approx(0.75));
  CHECK(*rows[4].accuracy >= 0.94);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(*rows[i].accuracy >= *rows[i - 1].accuracy);

  const auto run = greedy_pp(g, 10);
  const DensityValue opt{100, 27, true};
  const auto to90 = bench::iterations_to_fraction(run, opt, 9, 10);
  REQUIRE(to90.has_value());
  CHECK(*to90 <= 3);
  CHECK(bench::iterations_to_fraction(run, opt, 1, 2) == 1);
}

TEST_CASE("bench summary") {
  bench::BenchConfig config;
  config.max_iterations = 40;
  config.timing = false;
  const auto s = bench::run_bench(gen::bipartite_plus_cliques(4, 50, 30), config);
  REQUIRE(s.optimum.has_value());
  CHECK(same_density(*s.optimum, DensityValue{100, 27, true}));
  CHECK(s.iterations_to_90.has_value());
  CHECK_FALSE(s.exact_ms.has_value());

  const auto real = Graph::from_edges(3, {{0, 1, 0.5}, {1, 2, 0.25}, {0, 2, 0.75}}, true);
  const auto r = bench::run_bench(real, config);
  CHECK_FALSE(r.optimum.has_value());
  CHECK(r.certificate_ratio.has_value());
}
