#pragma once

#include <vector>

#include "densekit/graph.hpp"

namespace densekit {

struct SubsetDensity {
  std::vector<VertexId> subset;  // ascending
  DensityValue density;
};

// Exhaustive search over all 2^n - 1 non-empty subsets. Ties go to the
// smaller subset, then to the lexicographically smallest sorted id list.
// Throws SolverRefusal when n exceeds `max_vertices`.
SubsetDensity brute_force_densest(const Graph& g, int max_vertices = 24);

}  // namespace densekit
