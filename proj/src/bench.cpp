#include "densekit/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <vector>

#include "densekit/dual_cert.hpp"
#include "densekit/error.hpp"
#include "densekit/exact.hpp"

namespace densekit::bench {

namespace {

using clock = std::chrono::steady_clock;

bool reaches(const DensityValue& achieved, const DensityValue& optimum, std::int64_t num, std::int64_t den) {
  if (achieved.exact && optimum.exact) {
    const auto lhs = static_cast<__int128>(std::llround(achieved.numerator)) * optimum.denominator * den;
    const auto rhs = static_cast<__int128>(std::llround(optimum.numerator)) * achieved.denominator * num;
    return lhs >= rhs;
  }
  const double target = optimum.value() * static_cast<double>(num) / static_cast<double>(den);
  return achieved.value() >= target - 1e-12 * std::abs(target);
}

template <class F>
double median_ms(int repeats, F&& body) {
  std::vector<double> samples;
  for (int r = 0; r < std::max(1, repeats); ++r) {
    const auto start = clock::now();
    body();
    samples.push_back(std::chrono::duration<double, std::milli>(clock::now() - start).count());
  }
  std::sort(samples.begin(), samples.end());
  const auto mid = samples.size() / 2;
  return samples.size() % 2 == 1 ? samples[mid] : 0.5 * (samples[mid - 1] + samples[mid]);
}

}  // namespace

std::optional<std::int64_t> iterations_to_fraction(const GreedyPPResult& run, const DensityValue& optimum,
                                                   std::int64_t numerator, std::int64_t denominator) {
  for (const auto& s : run.per_iteration) {
    if (reaches(s.running_best, optimum, numerator, denominator)) return s.iteration;
  }
  return std::nullopt;
}

report::BenchSummary run_bench(const Graph& g, const BenchConfig& config) {
  if (config.max_iterations < 1) throw InputError("bench needs at least one iteration");
  report::BenchSummary summary;

  std::optional<Graph> scaled;
  if (config.weight_scale && !g.integral()) scaled = scale_to_integral(g, *config.weight_scale);
  const Graph& exact_input = scaled ? *scaled : g;
  bool exact_ok = !g.is_signed() && exact_input.integral();
  if (exact_ok) {
    try {
      const auto exact = exact_densest(exact_input);
      summary.optimum = density(g, exact.subset);
    } catch (const SolverRefusal&) {
      exact_ok = false;
    }
  }

  GreedyPPOptions options;
  options.tracker = config.tracker;
  if (summary.optimum) {
    options.observer = [&](const IterationSummary& s, const LoadVector&) {
      return !reaches(s.running_best, *summary.optimum, 1, 1);
    };
  }
  const auto run = greedy_pp(g, config.max_iterations, options);
  summary.iterations_run = run.iterations;

  if (summary.optimum) {
    summary.iterations_to_90 = iterations_to_fraction(run, *summary.optimum, 9, 10);
    summary.iterations_to_99 = iterations_to_fraction(run, *summary.optimum, 99, 100);
    summary.iterations_to_optimum = iterations_to_fraction(run, *summary.optimum, 1, 1);
  } else if (!g.is_signed()) {
    summary.certificate_ratio = certify(run.best_density, run.final_loads, run.iterations).ratio;
  }

  if (!config.timing) return summary;
  if (g.n() < config.min_timed_vertices) {
    summary.below_timer_resolution = true;
    return summary;
  }
  if (exact_ok) {
    summary.exact_ms = median_ms(config.repeats, [&] { exact_densest(exact_input); });
  }
  if (summary.optimum && summary.iterations_to_90) {
    const auto cap = *summary.iterations_to_90;
    summary.greedy_ms = median_ms(config.repeats, [&] { greedy_pp(g, cap, {.tracker = config.tracker, .charge_counts = nullptr, .observer = {}}); });
    if (summary.exact_ms && *summary.greedy_ms > 0.0) summary.speedup = *summary.exact_ms / *summary.greedy_ms;
  } else {
    summary.greedy_ms = median_ms(config.repeats, [&] { greedy_pp(g, config.max_iterations, {.tracker = config.tracker, .charge_counts = nullptr, .observer = {}}); });
  }
  return summary;
}

}  // namespace densekit::bench
