#include "support/reference_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace densekit::testing {

std::int64_t reference_max_flow(const flow::FlowNetwork& net) {
  const auto n = static_cast<std::size_t>(net.nodes());
  std::vector<std::vector<std::int64_t>> residual(n, std::vector<std::int64_t>(n, 0));
  for (const auto& a : net.arcs()) {
    residual[static_cast<std::size_t>(a.from)][static_cast<std::size_t>(a.to)] += a.capacity;
  }
  const auto s = static_cast<std::size_t>(net.source());
  const auto t = static_cast<std::size_t>(net.sink());
  std::int64_t total = 0;
  for (;;) {
    std::vector<std::size_t> parent(n, n);
    parent[s] = s;
    std::queue<std::size_t> queue;
    queue.push(s);
    while (!queue.empty() && parent[t] == n) {
      const auto v = queue.front();
      queue.pop();
      for (std::size_t w = 0; w < n; ++w) {
        if (parent[w] == n && residual[v][w] > 0) {
          parent[w] = v;
          queue.push(w);
        }
      }
    }
    if (parent[t] == n) return total;
    auto bottleneck = std::numeric_limits<std::int64_t>::max();
    for (auto v = t; v != s; v = parent[v]) bottleneck = std::min(bottleneck, residual[parent[v]][v]);
    for (auto v = t; v != s; v = parent[v]) {
      residual[parent[v]][v] -= bottleneck;
      residual[v][parent[v]] += bottleneck;
    }
    total += bottleneck;
  }
}

}  // namespace densekit::testing
