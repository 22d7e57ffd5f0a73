#include "densekit/generators.hpp"

#include <random>
#include <vector>

#include "densekit/error.hpp"

namespace densekit::gen {

Graph erdos_renyi(VertexId n, double p, std::uint64_t seed) {
  if (n < 0 || !(p >= 0.0 && p <= 1.0)) throw InputError("invalid G(n,p) parameters");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v, 1.0});
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph bipartite_plus_cliques(VertexId d, VertexId big, VertexId cliques) {
  if (d < 1 || big < 1 || cliques < 0) throw InputError("invalid family parameters");
  std::vector<Edge> edges;
  for (VertexId a = 0; a < d; ++a) {
    for (VertexId b = 0; b < big; ++b) edges.push_back({a, d + b, 1.0});
  }
  const VertexId clique_size = d + 2;
  VertexId base = d + big;
  for (VertexId c = 0; c < cliques; ++c, base += clique_size) {
    for (VertexId i = 0; i < clique_size; ++i) {
      for (VertexId j = i + 1; j < clique_size; ++j) edges.push_back({base + i, base + j, 1.0});
    }
  }
  return Graph::from_edges(base, std::move(edges));
}

Graph complete(VertexId n) { return erdos_renyi(n, 1.0, 0); }

Graph path(VertexId n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1.0});
  return Graph::from_edges(n, std::move(edges));
}

Graph star(VertexId leaves) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v <= leaves; ++v) edges.push_back({0, v, 1.0});
  return Graph::from_edges(leaves + 1, std::move(edges));
}

Graph petersen() {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5, 1.0});          // outer cycle
    edges.push_back({i, i + 5, 1.0});                // spokes
    edges.push_back({5 + i, 5 + (i + 2) % 5, 1.0});  // inner pentagram
  }
  return Graph::from_edges(10, std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  for (const auto& e : b.edges()) edges.push_back({e.u + a.n(), e.v + a.n(), e.weight});
  return Graph::from_edges(a.n() + b.n(), std::move(edges), a.weighted() || b.weighted());
}

}  // namespace densekit::gen
