#pragma once

#include <cstdint>
#include <optional>

#include "densekit/graph.hpp"
#include "densekit/peeling.hpp"
#include "densekit/report.hpp"

namespace densekit::bench {

struct BenchConfig {
  std::int64_t max_iterations = 100;
  int repeats = 5;
  MinTracker tracker = MinTracker::automatic;
  bool timing = true;
  // Graphs with fewer vertices report timings as below timer resolution.
  VertexId min_timed_vertices = 50;
  // Used for the exact side when the input graph has real weights.
  std::optional<double> weight_scale;
};

// First iteration whose running best reaches numerator/denominator of the
// optimum, compared exactly for integral graphs.
std::optional<std::int64_t> iterations_to_fraction(const GreedyPPResult& run, const DensityValue& optimum,
                                                   std::int64_t numerator, std::int64_t denominator);

// Greedy++ versus the exact solver. Speedup and times are reported, never
// asserted. When the exact solver refuses the graph, only the Greedy++ side
// and its certificate ratio are filled in.
report::BenchSummary run_bench(const Graph& g, const BenchConfig& config);

}  // namespace densekit::bench
