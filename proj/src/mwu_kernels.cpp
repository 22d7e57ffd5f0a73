#include <algorithm>

#include "densekit/mwu.hpp"

namespace densekit::mwu::kernels {

void assign_serial(const Graph& g, std::span<const double> x, std::span<std::uint8_t> to_v,
                   std::span<double> loads) {
  std::fill(loads.begin(), loads.end(), 0.0);
  const auto edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& edge = edges[e];
    const bool high = x[static_cast<std::size_t>(edge.v)] < x[static_cast<std::size_t>(edge.u)];
    to_v[e] = high ? 1 : 0;
    loads[static_cast<std::size_t>(high ? edge.v : edge.u)] += edge.weight;
  }
}

void assign_parallel(const Graph& g, std::span<const double> x, std::span<std::uint8_t> to_v,
                     std::span<double> loads) {
  const auto edges = g.edges();
  const auto m = static_cast<std::int64_t>(edges.size());
  const auto n = static_cast<std::int64_t>(g.n());
#pragma omp parallel
  {
#pragma omp for schedule(static)
    for (std::int64_t e = 0; e < m; ++e) {
      const auto& edge = edges[static_cast<std::size_t>(e)];
      to_v[static_cast<std::size_t>(e)] =
          x[static_cast<std::size_t>(edge.v)] < x[static_cast<std::size_t>(edge.u)] ? 1 : 0;
    }
    // Gather per vertex in adjacency order, which is ascending edge id, so the
    // sums match assign_serial bit for bit.
#pragma omp for schedule(dynamic, 256)
    for (std::int64_t v = 0; v < n; ++v) {
      double sum = 0.0;
      for (const auto& inc : g.neighbors(static_cast<VertexId>(v))) {
        const auto& edge = edges[static_cast<std::size_t>(inc.edge)];
        const bool high = to_v[static_cast<std::size_t>(inc.edge)] != 0;
        if ((high ? edge.v : edge.u) == v) sum += edge.weight;
      }
      loads[static_cast<std::size_t>(v)] = sum;
    }
  }
}

void update_weights_serial(std::span<double> w, std::span<const double> loads, double eta) {
  for (std::size_t i = 0; i < w.size(); ++i) w[i] *= 1.0 + eta * loads[i];
}

void update_weights_parallel(std::span<double> w, std::span<const double> loads, double eta) {
  const auto n = static_cast<std::int64_t>(w.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    w[static_cast<std::size_t>(i)] *= 1.0 + eta * loads[static_cast<std::size_t>(i)];
  }
}

}  // namespace densekit::mwu::kernels
