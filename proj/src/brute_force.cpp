#include "densekit/brute_force.hpp"

#include <bit>
#include <cstdint>
#include <string>

#include "densekit/error.hpp"

namespace densekit {

namespace {

// Enumerates subsets in Gray-code order so each step toggles one vertex and
// the induced weight updates in O(deg). Weight is an integer for integral
// graphs and a long double otherwise.
template <class Weight>
SubsetDensity enumerate(const Graph& g) {
  const auto n = static_cast<unsigned>(g.n());
  std::vector<std::uint32_t> adjacency(n, 0);
  for (const auto& e : g.edges()) {
    adjacency[static_cast<unsigned>(e.u)] |= 1u << e.v;
    adjacency[static_cast<unsigned>(e.v)] |= 1u << e.u;
  }

  auto better = [&](Weight w, int size, std::uint32_t mask, Weight bw, int bsize,
                    std::uint32_t bmask) {
    const DensityValue a{static_cast<double>(w), size, g.integral()};
    const DensityValue b{static_cast<double>(bw), bsize, g.integral()};
    if (denser(a, b)) return true;
    if (denser(b, a)) return false;
    if (size != bsize) return size < bsize;
    const auto diff = mask ^ bmask;
    return (mask & diff & (~diff + 1)) != 0;
  };

  std::uint32_t mask = 0;
  Weight weight = 0;
  std::uint32_t best_mask = 0;
  Weight best_weight = 0;
  int best_size = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < total; ++k) {
    const auto v = static_cast<unsigned>(std::countr_zero(k));
    const std::uint32_t bit = 1u << v;
    Weight delta = 0;
    if constexpr (std::is_integral_v<Weight>) {
      if (!g.weighted()) {
        delta = std::popcount(adjacency[v] & mask);
      } else {
        for (const auto& inc : g.neighbors(static_cast<VertexId>(v))) {
          if (mask >> inc.neighbor & 1u) delta += static_cast<Weight>(g.edge(inc.edge).weight);
        }
      }
    } else {
      for (const auto& inc : g.neighbors(static_cast<VertexId>(v))) {
        if (mask >> inc.neighbor & 1u) delta += static_cast<Weight>(g.edge(inc.edge).weight);
      }
    }
    if (mask & bit) {
      mask &= ~bit;
      weight -= delta;
    } else {
      mask |= bit;
      weight += delta;
    }
    const int size = std::popcount(mask);
    if (best_size == 0 || better(weight, size, mask, best_weight, best_size, best_mask)) {
      best_mask = mask;
      best_weight = weight;
      best_size = size;
    }
  }

  SubsetDensity result;
  for (unsigned v = 0; v < n; ++v) {
    if (best_mask >> v & 1u) result.subset.push_back(static_cast<VertexId>(v));
  }
  // Recompute directly so the reported value does not carry enumeration drift.
  result.density = density(g, result.subset);
  return result;
}

}  // namespace

SubsetDensity brute_force_densest(const Graph& g, int max_vertices) {
  if (g.n() < 1) throw UndefinedDensityError();
  const int guard = std::min(max_vertices, 31);
  if (g.n() > guard) {
    throw SolverRefusal("brute-force oracle is limited to " + std::to_string(guard) +
                        " vertices, graph has " + std::to_string(g.n()));
  }
  if (g.integral()) return enumerate<std::int64_t>(g);
  return enumerate<long double>(g);
}

}  // namespace densekit
