#pragma once

#include <cstdint>
#include <vector>

#include "densekit/flow.hpp"
#include "densekit/graph.hpp"

namespace densekit {

// Candidate density D = p / q.
struct FeasibilityQuery {
  std::int64_t p = 0;
  std::int64_t q = 1;
};

// Node layout of the network built by build_feasibility_network.
struct FeasibilityLayout {
  flow::NodeId source = 0;
  flow::NodeId sink = 1;
  flow::NodeId first_vertex = 2;
  flow::NodeId first_edge = 0;  // first_vertex + n

  flow::NodeId vertex_node(VertexId v) const { return first_vertex + v; }
  flow::NodeId edge_node(EdgeId e) const { return first_edge + e; }
};

// Scaled dual-feasibility network: source -> vertex with capacity p,
// vertex -> incident edge and edge -> sink with capacity q * w_e. D is a
// feasible load bound iff the max flow equals q * w(E).
// Requires non-negative integer weights; throws SolverRefusal otherwise.
flow::FlowNetwork build_feasibility_network(const Graph& g, FeasibilityQuery query,
                                            FeasibilityLayout* layout = nullptr);

struct FeasibilityOutcome {
  bool feasible = false;
  flow::Capacity flow_value = 0;
  flow::Capacity demand = 0;  // q * w(E)
  // Vertices on the sink side of the min cut; non-empty exactly when
  // infeasible, and then density(dense_set) > p / q.
  std::vector<VertexId> dense_set;
};

FeasibilityOutcome test_feasibility(const Graph& g, FeasibilityQuery query);

struct ExactResult {
  std::vector<VertexId> subset;  // ascending
  DensityValue density;
  std::int64_t flow_queries = 0;
};

struct ExactOptions {
  // Greedy++ passes used to seed the lower end of the search.
  std::int64_t seed_iterations = 2;
};

// Maximum-density subset by binary search over scaled feasibility queries.
// Refuses signed or non-integral graphs with SolverRefusal.
ExactResult exact_densest(const Graph& g, const ExactOptions& options = {});

}  // namespace densekit
