#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "densekit/generators.hpp"
#include "densekit/graph.hpp"

namespace densekit::testing {

struct SuiteInstance {
  std::uint64_t seed;
  VertexId n;
  double p;
  Graph graph;
};

// Seeded G(n, p) instances with n in [min_n, max_n] and p cycling through
// {0.3, 0.5, 0.8}. Edgeless draws are replaced by the next seed.
inline std::vector<SuiteInstance> er_suite(int count, VertexId min_n, VertexId max_n,
                                           std::uint64_t base_seed = 20240601) {
  constexpr std::array<double, 3> probs{0.3, 0.5, 0.8};
  std::vector<SuiteInstance> out;
  std::uint64_t seed = base_seed;
  for (int i = 0; i < count; ++i) {
    const VertexId n = min_n + static_cast<VertexId>(i % (max_n - min_n + 1));
    const double p = probs[static_cast<std::size_t>(i) % probs.size()];
    for (;;) {
      auto g = gen::erdos_renyi(n, p, seed);
      ++seed;
      if (g.m() > 0) {
        out.push_back({seed - 1, n, p, std::move(g)});
        break;
      }
    }
  }
  return out;
}

}  // namespace densekit::testing
