#include <doctest.h>

#include <random>
#include <sstream>

#include "densekit/error.hpp"
#include "densekit/generators.hpp"
#include "densekit/graph.hpp"

using namespace densekit;

TEST_CASE("parse cleans self-loops, duplicates and comments") {
  const auto g = parse_edge_list("# c\n1 2\n2 1\n3 3\n2 3");
  CHECK(g.n() == 3);
  CHECK(g.m() == 2);
  CHECK(g.label(g.edge(0).u) == "1");
  CHECK(g.label(g.edge(0).v) == "2");
  CHECK(g.label(g.edge(1).u) == "2");
  CHECK(g.label(g.edge(1).v) == "3");
  CHECK_FALSE(g.weighted());
}

TEST_CASE("parse weighted line") {
  const auto g = parse_edge_list("1 2 3.5", {.weighted = true});
  REQUIRE(g.m() == 1);
  CHECK(g.edge(0).weight == 3.5);
  CHECK(g.weighted());
  CHECK_FALSE(g.integral());
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_edge_list(""), EmptyGraphError);
  CHECK_THROWS_AS(parse_edge_list("# only comments\n\n"), EmptyGraphError);
  CHECK_THROWS_AS(parse_edge_list("4 4\n"), EmptyGraphError);
  try {
    parse_edge_list("1 2\n3\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_edge_list("1 2 x", {.weighted = true}), ParseError);
  CHECK_THROWS_AS(parse_edge_list("1 2", {.weighted = true}), ParseError);
  CHECK_THROWS_AS(parse_edge_list("1 2 3"), ParseError);
}

TEST_CASE("weighted duplicates keep the first weight and warn") {
  std::vector<std::string> warnings;
  ParseOptions options{.weighted = true};
  options.on_warning = [&](const std::string& w) { warnings.push_back(w); };
  const auto g = parse_edge_list("a b 2\nb a 5\nb c -1\n", options);
  CHECK(g.m() == 2);
  CHECK(g.edge(0).weight == 2.0);
  CHECK(warnings.size() == 1);
  CHECK(g.is_signed());
  CHECK(g.integral());
}

TEST_CASE("labels are arbitrary strings remapped densely") {
  const auto g = parse_edge_list("% comment\nfoo 1000000\n1000000\tbar\n", {.comment_prefix = "%"});
  CHECK(g.n() == 3);
  CHECK(g.label(0) == "foo");
  CHECK(g.label(1) == "1000000");
  CHECK(g.label(2) == "bar");
}

TEST_CASE("graph invariants") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0, 1.0}}), InputError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1, 1.0}, {1, 0, 1.0}}), InputError);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2, 1.0}}), InputError);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1, 2.0}}, false), InputError);

  const auto g = gen::erdos_renyi(30, 0.3, 7);
  std::size_t adjacency = 0;
  for (VertexId v = 0; v < g.n(); ++v) {
    adjacency += g.neighbors(v).size();
    EdgeId last = -1;
    for (const auto& inc : g.neighbors(v)) {
      CHECK(inc.edge > last);
      last = inc.edge;
      const auto& e = g.edge(inc.edge);
      CHECK(((e.u == v && e.v == inc.neighbor) || (e.v == v && e.u == inc.neighbor)));
    }
  }
  CHECK(adjacency == 2 * static_cast<std::size_t>(g.m()));
  for (const auto& e : g.edges()) {
    CHECK(e.u < e.v);
    CHECK(e.weight == 1.0);
  }
}

TEST_CASE("density examples") {
  const auto k4 = gen::complete(4);
  const std::vector<VertexId> all{0, 1, 2, 3};
  const std::vector<VertexId> three{0, 1, 2};
  CHECK(density(k4, all).value() == doctest::Approx(1.5));
  CHECK(density(k4, all).numerator == 6.0);
  CHECK(density(k4, three).value() == 1.0);

  const auto heavy = Graph::from_edges(2, {{0, 1, 4.0}}, true);
  const std::vector<VertexId> both{0, 1};
  CHECK(density(heavy, both).value() == 2.0);

  CHECK_THROWS_AS(density(k4, std::vector<VertexId>{}), UndefinedDensityError);
  CHECK_THROWS_AS(density(k4, std::vector<VertexId>{7}), InputError);
}

TEST_CASE("density properties on random subsets") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = gen::erdos_renyi(12, 0.5, 1000 + static_cast<std::uint64_t>(trial));
    std::vector<VertexId> all(static_cast<std::size_t>(g.n()));
    for (VertexId v = 0; v < g.n(); ++v) all[static_cast<std::size_t>(v)] = v;
    const auto whole = density(g, all);
    CHECK(whole.numerator == static_cast<double>(g.m()));
    CHECK(whole.denominator == g.n());
    CHECK(whole == whole_density(g));

    std::vector<VertexId> subset;
    for (VertexId v = 0; v < g.n(); ++v) {
      if (rng() % 2) subset.push_back(v);
    }
    if (subset.empty()) continue;
    const auto d = density(g, subset);
    CHECK(d.value() >= 0.0);
    CHECK(2.0 * d.numerator <= static_cast<double>(d.denominator) * static_cast<double>(d.denominator - 1));
  }
}

TEST_CASE("exact density comparison") {
  const DensityValue a{2, 3, true};
  const DensityValue b{4, 6, true};
  const DensityValue c{5, 7, true};
  CHECK(same_density(a, b));
  CHECK(denser(c, a));
  CHECK_FALSE(denser(a, c));
  const DensityValue x{1.0, 3, false};
  const DensityValue y{1.0 + 1e-15, 3, false};
  CHECK(same_density(x, y));
}

TEST_CASE("serialize then parse is idempotent") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = parse_edge_list(
        [&] {
          std::mt19937_64 rng(seed);
          std::ostringstream text;
          for (int i = 0; i < 40; ++i) text << "v" << rng() % 15 << ' ' << "v" << rng() % 15 << '\n';
          text << "v100 v101\n";
          return text.str();
        }());
    std::ostringstream out;
    write_edge_list(out, g);
    const auto again = parse_edge_list(out.str());
    CHECK(again == g);
  }
  const auto w = parse_edge_list("x y 0.1\ny z 1e-3\nz x 12345.678\n", {.weighted = true});
  std::ostringstream out;
  write_edge_list(out, w);
  CHECK(parse_edge_list(out.str(), {.weighted = true}) == w);
}

TEST_CASE("scale_to_integral") {
  const auto w = parse_edge_list("a b 0.5\nb c 1.25\n", {.weighted = true});
  const auto scaled = scale_to_integral(w, 4.0);
  CHECK(scaled.integral());
  CHECK(scaled.edge(0).weight == 2.0);
  CHECK(scaled.edge(1).weight == 5.0);
  CHECK_THROWS_AS(scale_to_integral(w, 3.0), InputError);
}
