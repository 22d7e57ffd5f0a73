#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "densekit/graph.hpp"

namespace densekit {

// How a peeling pass finds the vertex of minimum cumulative degree. Both
// structures break ties toward the smallest vertex id, so they produce the
// same removal order.
enum class MinTracker {
  automatic,  // buckets for unweighted graphs, heap otherwise
  buckets,    // integer-keyed buckets with a resuming cursor
  heap,       // binary heap with lazy deletion
};

// Accumulated per-vertex peeling loads. Integral graphs keep exact 64-bit
// integer loads; other graphs keep doubles.
class LoadVector {
 public:
  LoadVector() = default;
  static LoadVector zeros(const Graph& g);
  // Loads as if `iterations` passes had already run.
  static LoadVector from_exact(std::vector<std::int64_t> values, std::int64_t iterations);
  static LoadVector from_real(std::vector<double> values, std::int64_t iterations);

  bool exact() const noexcept { return exact_; }
  VertexId size() const noexcept;
  // Number of completed peeling passes folded into these loads.
  std::int64_t iterations() const noexcept { return iterations_; }

  double operator[](VertexId v) const;
  std::span<const std::int64_t> exact_values() const noexcept { return integer_; }
  std::span<const double> real_values() const noexcept { return real_; }

  // Largest load as an exact ratio numerator (exact() loads are integral).
  double max() const;
  double sum() const;

  friend bool operator==(const LoadVector&, const LoadVector&) = default;

 private:
  friend class LoadAccess;
  bool exact_ = true;
  std::int64_t iterations_ = 0;
  std::vector<std::int64_t> integer_;
  std::vector<double> real_;
};

struct PeelOptions {
  MinTracker tracker = MinTracker::automatic;
  // When non-null (sized to m), counts per edge the passes that charged the
  // edge to its lower-id endpoint `u`; the rest went to `v`.
  std::vector<std::int64_t>* charge_counts = nullptr;
};

// One peeling pass: the removal order, the densest suffix it visited, and the
// charge each vertex took (its residual degree when removed).
struct PeelResult {
  std::vector<VertexId> order;
  // Vertices removed before the densest suffix; the suffix is order[best_removed..].
  std::size_t best_removed = 0;
  DensityValue best_density;
  // density_trace[k] is the density after k removals, k = 0 .. n-1.
  std::vector<double> density_trace;
  std::vector<double> increments;

  std::vector<VertexId> best_subset() const;
};

// Charikar's greedy peeling.
PeelResult charikar_peel(const Graph& g, const PeelOptions& options = {});

// One load-aware pass: repeatedly removes the vertex minimizing
// load + residual degree and adds that residual degree to its load.
PeelResult peel_iteration(const Graph& g, LoadVector& loads, const PeelOptions& options = {});

struct IterationSummary {
  std::int64_t iteration = 0;
  DensityValue pass_best;      // densest suffix of this pass
  DensityValue running_best;   // best across passes 1..iteration
  std::int64_t running_best_size = 0;
  double max_load = 0.0;       // max_v load after this pass

  friend bool operator==(const IterationSummary&, const IterationSummary&) = default;
};

struct GreedyPPOptions {
  MinTracker tracker = MinTracker::automatic;
  std::vector<std::int64_t>* charge_counts = nullptr;
  // Called after each pass; returning false stops the run early.
  std::function<bool(const IterationSummary&, const LoadVector&)> observer;
};

struct GreedyPPResult {
  std::vector<IterationSummary> per_iteration;
  std::vector<VertexId> best_order;  // removal order of the pass that produced the best
  std::size_t best_removed = 0;
  DensityValue best_density;
  LoadVector final_loads;
  std::int64_t iterations = 0;

  std::vector<VertexId> best_subset() const;
};

// Iterated peeling with loads carried across passes. The running best is only
// replaced on strict improvement.
GreedyPPResult greedy_pp(const Graph& g, std::int64_t iterations, const GreedyPPOptions& options = {});

}  // namespace densekit
