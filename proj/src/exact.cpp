#include "densekit/exact.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "densekit/error.hpp"
#include "densekit/peeling.hpp"

namespace densekit {

namespace {

void require_exact_input(const Graph& g) {
  if (g.m() == 0) throw EmptyGraphError();
  if (g.is_signed()) {
    throw SolverRefusal("exact solver refuses signed graphs: the densest subgraph problem is NP-hard with negative weights");
  }
  if (!g.integral()) {
    throw SolverRefusal("exact solver needs integer weights; pass a scaling factor to convert real weights");
  }
}

flow::Capacity checked_mul(std::int64_t a, std::int64_t b) {
  flow::Capacity out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw InputError("feasibility capacities overflow 64-bit integers");
  return out;
}

}  // namespace

flow::FlowNetwork build_feasibility_network(const Graph& g, FeasibilityQuery query,
                                            FeasibilityLayout* layout) {
  require_exact_input(g);
  if (query.p < 1 || query.q < 1) throw InputError("feasibility query needs p, q >= 1");
  FeasibilityLayout lay;
  lay.first_edge = lay.first_vertex + g.n();
  const auto nodes = static_cast<flow::NodeId>(2 + g.n() + g.m());
  flow::FlowNetwork net(nodes, lay.source, lay.sink);
  for (VertexId v = 0; v < g.n(); ++v) net.add_arc(lay.source, lay.vertex_node(v), query.p);
  for (EdgeId e = 0; e < g.m(); ++e) {
    const auto& edge = g.edge(e);
    const auto cap = checked_mul(query.q, std::llround(edge.weight));
    net.add_arc(lay.vertex_node(edge.u), lay.edge_node(e), cap);
    net.add_arc(lay.vertex_node(edge.v), lay.edge_node(e), cap);
    net.add_arc(lay.edge_node(e), lay.sink, cap);
  }
  if (layout != nullptr) *layout = lay;
  return net;
}

FeasibilityOutcome test_feasibility(const Graph& g, FeasibilityQuery query) {
  FeasibilityLayout lay;
  auto net = build_feasibility_network(g, query, &lay);
  const auto result = flow::max_flow(net);
  FeasibilityOutcome out;
  out.flow_value = result.value;
  out.demand = checked_mul(query.q, std::llround(g.total_weight()));
  out.feasible = result.value == out.demand;
  if (!out.feasible) {
    for (VertexId v = 0; v < g.n(); ++v) {
      if (!result.source_side[static_cast<std::size_t>(lay.vertex_node(v))]) out.dense_set.push_back(v);
    }
  }
  return out;
}

ExactResult exact_densest(const Graph& g, const ExactOptions& options) {
  require_exact_input(g);
  ExactResult result;

  const auto seed = greedy_pp(g, std::max<std::int64_t>(1, options.seed_iterations));
  const auto a = std::llround(seed.best_density.numerator);
  const auto b = seed.best_density.denominator;

  ++result.flow_queries;
  auto first = test_feasibility(g, {std::max<std::int64_t>(a, 1), b});
  if (first.feasible) {
    // The greedy density is itself a dual bound, so it is optimal.
    result.subset = seed.best_subset();
    result.density = density(g, result.subset);
    return result;
  }

  // Distinct densities are fractions with denominators <= n, so they differ
  // by at least 1/(n(n-1)); a grid finer than that isolates the optimum.
  const auto n = static_cast<std::int64_t>(g.n());
  const std::int64_t grid = checked_mul(n, n - 1) + 1;
  std::int64_t lo = static_cast<std::int64_t>((static_cast<__int128>(a) * grid) / b);
  std::int64_t hi = checked_mul(std::llround(g.max_weighted_degree()), grid);
  std::vector<VertexId> witness = std::move(first.dense_set);

  while (hi - lo > 1) {
    const auto mid = lo + (hi - lo) / 2;
    ++result.flow_queries;
    auto outcome = test_feasibility(g, {mid, grid});
    if (outcome.feasible) {
      hi = mid;
    } else {
      lo = mid;
      witness = std::move(outcome.dense_set);
    }
  }

  result.subset = std::move(witness);
  result.density = density(g, result.subset);
  return result;
}

}  // namespace densekit
