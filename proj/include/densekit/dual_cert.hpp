#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "densekit/graph.hpp"
#include "densekit/peeling.hpp"

namespace densekit {

// Weak-duality sandwich for one Greedy++ run: the density it achieved is a
// lower bound on the optimum, and the largest average load is an upper bound.
struct DualCertificate {
  DensityValue lower;
  // max_v load_v over the iteration count, kept as an exact ratio.
  DensityValue upper;
  double ratio = 0.0;  // lower / upper, in (0, 1]
  std::int64_t iterations = 0;

  friend bool operator==(const DualCertificate&, const DualCertificate&) = default;
};

// max_v load_v / T. Throws InputError when T < 1 or the loads came from a
// different number of passes.
double dual_upper_bound(const LoadVector& loads, std::int64_t iterations);
DensityValue dual_upper_bound_exact(const LoadVector& loads, std::int64_t iterations);

// Throws InputError when the inputs cannot come from one run (iteration
// mismatch, or lower > upper).
DualCertificate certify(const DensityValue& best, const LoadVector& loads, std::int64_t iterations);

// The averaged dual point reconstructed from per-edge charge counts:
// share[e] = {f(u), f(v)} and the induced per-vertex loads.
struct AveragedDual {
  std::vector<std::array<double, 2>> share;
  std::vector<double> vertex_load;
};

AveragedDual reconstruct_average_dual(const Graph& g, std::span<const std::int64_t> charge_counts,
                                      std::int64_t iterations);

}  // namespace densekit
