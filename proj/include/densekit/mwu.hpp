#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "densekit/graph.hpp"

namespace densekit::mwu {

// A point of the dual polytope: each edge splits its unit (times its weight)
// between its endpoints, share[e] = {f_e(u), f_e(v)} with f_e(u) + f_e(v) >= 1.
struct DualAssignment {
  std::vector<std::array<double, 2>> share;
  std::vector<double> loads;  // per vertex, sum of w_e * f_e(v)

  double max_load() const;
};

struct OracleResult {
  DualAssignment assignment;
  double value = 0.0;  // C(x) = sum_v x_v * load_v
};

// Inner minimization for a fixed vertex distribution x: every edge goes
// entirely to the endpoint with the smaller x (ties to the smaller id).
// Throws InputError on negative or wrongly sized x.
OracleResult oracle_min(const Graph& g, std::span<const double> x);

// The oracle's inner loops, shared by oracle_min and mwu_solve. Both variants
// write identical bits: per-vertex loads always accumulate in ascending edge id.
namespace kernels {

// to_v[e] = 1 when edge e goes to its higher-id endpoint v.
void assign_serial(const Graph& g, std::span<const double> x, std::span<std::uint8_t> to_v,
                   std::span<double> loads);
void assign_parallel(const Graph& g, std::span<const double> x, std::span<std::uint8_t> to_v,
                     std::span<double> loads);

// w_i <- w_i * (1 + eta * load_i)
void update_weights_serial(std::span<double> w, std::span<const double> loads, double eta);
void update_weights_parallel(std::span<double> w, std::span<const double> loads, double eta);

}  // namespace kernels

struct MwuOptions {
  double eps = 0.1;
  std::optional<std::int64_t> max_iters;
  // Rounds = ceil(iteration_constant * width * ln n / eps^2), capped by max_iters.
  double iteration_constant = 8.0;
  bool record_rounds = false;
  bool parallel = false;
  std::int64_t renormalize_every = 64;
};

struct MwuResult {
  double average_value = 0.0;  // (1/T) sum_t C(x^(t)), a lower estimate of the optimum
  double max_load = 0.0;       // max load of the averaged assignment, an upper bound
  DualAssignment average;
  // Rounds in which edge e went to its lower-id endpoint.
  std::vector<std::int64_t> lower_counts;
  std::int64_t rounds = 0;
  double eta = 0.0;
  double width = 0.0;
  std::vector<double> round_values;  // C(x^(t)) per round when recorded
  std::vector<double> round_max_increment;  // max_v per-round load when recorded
};

std::int64_t iteration_bound(const Graph& g, double eps, double iteration_constant);

// Throws InputError for eps outside (0, 1), an empty graph, or negative weights.
MwuResult mwu_solve(const Graph& g, const MwuOptions& options = {});

}  // namespace densekit::mwu
