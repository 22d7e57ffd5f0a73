#pragma once

#include <cstdint>

#include "densekit/graph.hpp"

namespace densekit::gen {

// G(n, p) with std::mt19937_64 seeded by `seed`; edges in lexicographic order.
Graph erdos_renyi(VertexId n, double p, std::uint64_t seed);

// Disjoint union of K_{d,big} followed by `cliques` copies of K_{d+2}.
// Vertices 0..d-1 are the small side, d..d+big-1 the large side.
Graph bipartite_plus_cliques(VertexId d, VertexId big, VertexId cliques);

Graph complete(VertexId n);
Graph path(VertexId n);
Graph star(VertexId leaves);
Graph petersen();

// Disjoint union; b's ids are shifted by a.n().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace densekit::gen
