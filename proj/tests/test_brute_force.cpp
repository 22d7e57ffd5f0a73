#include <doctest.h>

#include "densekit/brute_force.hpp"
#include "densekit/error.hpp"
#include "densekit/generators.hpp"

using namespace densekit;

namespace {

// Direct enumeration with density() per subset; masks in increasing order,
// so among equal densities and sizes the lexicographic rule is applied
// explicitly.
SubsetDensity naive_densest(const Graph& g) {
  SubsetDensity best;
  const auto n = static_cast<unsigned>(g.n());
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<VertexId> s;
    for (unsigned v = 0; v < n; ++v) {
      if (mask >> v & 1u) s.push_back(static_cast<VertexId>(v));
    }
    const auto d = density(g, s);
    bool take = best.subset.empty() || denser(d, best.density);
    if (!take && same_density(d, best.density)) {
      take = s.size() < best.subset.size() || (s.size() == best.subset.size() && s < best.subset);
    }
    if (take) best = {s, d};
  }
  return best;
}

}  // namespace

TEST_CASE("brute force examples") {
  const auto tri = brute_force_densest(gen::complete(3));
  CHECK(tri.subset == std::vector<VertexId>{0, 1, 2});
  CHECK(tri.density.value() == 1.0);

  const auto p3 = brute_force_densest(gen::path(3));
  CHECK(p3.subset == std::vector<VertexId>{0, 1, 2});
  CHECK(p3.density.numerator == 2.0);
  CHECK(p3.density.denominator == 3);

  // K_{3,9} plus a disjoint K_5: the bipartite part wins with 27/12.
  const auto g = gen::disjoint_union(gen::bipartite_plus_cliques(3, 9, 0), gen::complete(5));
  const auto best = brute_force_densest(g);
  CHECK(best.subset.size() == 12);
  CHECK(best.subset.back() == 11);
  CHECK(best.density.numerator == 27.0);
  CHECK(best.density.denominator == 12);
}

TEST_CASE("brute force refuses oversize instances") {
  CHECK_THROWS_AS(brute_force_densest(gen::path(25)), SolverRefusal);
  CHECK_THROWS_AS(brute_force_densest(gen::path(10), 8), SolverRefusal);
}

TEST_CASE("gray-code enumeration agrees with direct enumeration") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = gen::erdos_renyi(4 + static_cast<VertexId>(seed % 7), 0.45, seed);
    const auto fast = brute_force_densest(g);
    const auto slow = naive_densest(g);
    CHECK(fast.subset == slow.subset);
    CHECK(fast.density == slow.density);
  }
}

TEST_CASE("weighted brute force") {
  // Heavy edge alone beats the triangle.
  const auto g = Graph::from_edges(4, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}, {2, 3, 5.0}}, true);
  const auto best = brute_force_densest(g);
  CHECK(best.subset == std::vector<VertexId>{2, 3});
  CHECK(best.density.value() == 2.5);

  const auto real = Graph::from_edges(3, {{0, 1, 0.3}, {1, 2, 0.7}, {0, 2, 0.1}}, true);
  CHECK(brute_force_densest(real).subset == naive_densest(real).subset);
}
